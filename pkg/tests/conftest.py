import contextlib
import time

import pytest

_RESULTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.fixture
def criterion(request):
    """Run one acceptance criterion, timing it against its runtime bound."""
    results = request.config.stash[_RESULTS]

    @contextlib.contextmanager
    def run(number, title, budget_s=None):
        t0 = time.perf_counter()
        try:
            yield
            elapsed = time.perf_counter() - t0
            if budget_s is not None:
                assert elapsed < budget_s, f"took {elapsed:.1f}s, bound is {budget_s}s"
        except BaseException as exc:
            elapsed = time.perf_counter() - t0
            results.append((number, "FAIL", title, elapsed, str(exc).splitlines()[0] if str(exc) else type(exc).__name__))
            raise
        results.append((number, "PASS", title, elapsed, ""))

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, title, elapsed, why in sorted(results):
        line = f"{status}  criterion {number:>2}: {title}  [{elapsed:.2f}s]"
        if why:
            line += f"  -- {why}"
        terminalreporter.write_line(line)
