import numpy as np
import pytest


def random_spectrum(rng, n, sparsity=0.0):
    """Non-negative vector summing to n, optionally with zeroed entries."""
    lam = rng.dirichlet(np.ones(n))
    if sparsity:
        mask = rng.random(n) < sparsity
        if mask.all():
            mask[rng.integers(n)] = False
        lam[mask] = 0.0
    return n * lam / lam.sum()


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _ACCEPTANCE:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  ({duration:.2f}s)")
