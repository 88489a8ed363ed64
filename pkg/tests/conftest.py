import pytest

from ipgp.graph import GPParams
from ipgp.roots import find_roots
from ipgp.transfer import independence_polynomial

ACCEPTANCE_LINES = []

# the full regime: k in 1..4, n from 2k+1 to 30
REGIME = [(n, k) for k in (1, 2, 3, 4) for n in range(2 * k + 1, 31)]


def record_criterion(number, title, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    line = f"[{status}] criterion {number}: {title}"
    if detail:
        line += f" -- {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def regime_polys():
    return {(n, k): independence_polynomial(GPParams(n, k)) for n, k in REGIME}


@pytest.fixture(scope="session")
def regime_reports(regime_polys):
    return {key: find_roots(p) for key, p in regime_polys.items()}
