import random

import pytest
from hypothesis import strategies as st

from hilbexc.collection import ExceptionalCollection
from hilbexc.gvs import GradedDim

# lines recorded by test_acceptance, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


def graded_dims(lo=-6, hi=6, max_total=4):
    """Hypothesis strategy for GradedDim with bounded support and total dimension."""
    return st.dictionaries(st.integers(lo, hi), st.integers(1, max_total), max_size=max_total).filter(
        lambda d: sum(d.values()) <= max_total
    ).map(GradedDim)


def random_graded_dim(rng: random.Random, lo=0, hi=2, max_total=3) -> GradedDim:
    total = rng.randint(0, max_total)
    out: dict[int, int] = {}
    for _ in range(total):
        d = rng.randint(lo, hi)
        out[d] = out.get(d, 0) + 1
    return GradedDim(out)


def random_base(rng: random.Random, k: int, lo=0, hi=2, max_total=3) -> ExceptionalCollection:
    """Valid collection with random upper-triangular entries in degrees lo..hi."""
    upper = {(i, j): random_graded_dim(rng, lo, hi, max_total) for i in range(k) for j in range(i + 1, k)}
    return ExceptionalCollection.from_diagonal(k, upper)


@pytest.fixture
def rng():
    return random.Random(20240611)
