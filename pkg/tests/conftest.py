import pytest

_ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = []


@pytest.fixture
def acceptance(request):
    """Record one acceptance line: ``acceptance(number, ok, detail)``."""
    log = request.config.stash[_ACCEPTANCE]

    def record(number, ok, detail=""):
        log.append((number, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = sorted(config.stash.get(_ACCEPTANCE, []))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in lines:
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
