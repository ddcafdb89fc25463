import pytest

_criteria = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    props = dict(report.user_properties)
    if "criterion" in props:
        _criteria.append((props["criterion"], report.outcome, props.get("seconds")))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, seconds in sorted(_criteria, key=lambda c: int(c[0].split()[0])):
        status = "PASS" if outcome == "passed" else "FAIL"
        timing = f" ({seconds:.2f}s)" if seconds is not None else ""
        terminalreporter.write_line(f"[{status}] {name}{timing}")


@pytest.fixture
def criterion(record_property):
    """Time a criterion body and tag the report so the summary can list it."""
    import time

    class _Criterion:
        def __init__(self):
            self.name = None
            self.start = None

        def __call__(self, name):
            self.name = name
            record_property("criterion", name)
            return self

        def __enter__(self):
            self.start = time.perf_counter()
            return self

        def __exit__(self, *exc):
            self.seconds = time.perf_counter() - self.start
            record_property("seconds", self.seconds)
            return False

    return _Criterion()
