import random

import pytest

from qsat import Formula

PAPER_CLAUSES = [[1], [2, 3], [1, -3], [-1, -2, 3]]
PAPER_DIMACS = "p cnf 3 4\n1 0\n2 3 0\n1 -3 0\n-1 -2 3 0\n"


def random_formula(rng: random.Random, n: int, m: int, max_size: int | None = None) -> Formula:
    """Clauses of 1..max_size distinct variables with random signs."""
    max_size = n if max_size is None else min(max_size, n)
    clauses = []
    for _ in range(m):
        k = rng.randint(1, max_size)
        clauses.append([v if rng.random() < 0.5 else -v for v in rng.sample(range(1, n + 1), k)])
    return Formula.from_ints(n, clauses)


@pytest.fixture
def paper_formula():
    return Formula.from_ints(3, PAPER_CLAUSES)


_CRITERIA: dict[tuple[int, str], list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _CRITERIA.setdefault(tuple(marker.args), []).append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (num, text), passed in sorted(_CRITERIA.items()):
        status = "PASS" if all(passed) else "FAIL"
        terminalreporter.write_line(
            f"[{status}] criterion {num}: {text} ({sum(passed)}/{len(passed)} checks passed)")
