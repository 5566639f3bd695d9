import pytest

ACCEPTANCE = []


@pytest.fixture
def verdict(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    def record(number, title, ok, seconds, limit, info=""):
        timely = limit is None or seconds < limit
        status = "PASS" if ok and timely else "FAIL"
        bound = "" if limit is None else f" (limit {limit:g}s)"
        line = f"[{status}] #{number} {title}: {seconds:.2f}s{bound}" + (f"; {info}" if info else "")
        ACCEPTANCE.append(line)
        print(line)
        assert ok, line
        assert timely, line
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split("#")[1].split()[0])):
            terminalreporter.write_line(line)
