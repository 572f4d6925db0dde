from itertools import combinations
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from matroid_gwp.gf import field, matrix, vector_matroid
from matroid_gwp.io import read_matrix, read_matroid

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

RUNEX_H = [
    [1, 0, 0, 3, 3, 3, 4],
    [0, 1, 0, 0, 2, 2, 0],
    [0, 0, 1, 4, 4, 4, 4],
]

RUNEX_BASES = {
    (1, 3, 6), (1, 3, 5), (1, 2, 6), (2, 3, 6), (1, 2, 5), (1, 5, 7), (3, 6, 7), (2, 4, 7),
    (1, 4, 6), (2, 3, 4), (4, 6, 7), (1, 2, 3), (1, 2, 7), (3, 4, 5), (1, 6, 7), (1, 4, 5),
    (1, 2, 4), (2, 3, 7), (4, 5, 7), (3, 5, 7), (2, 6, 7), (2, 5, 7), (2, 3, 5), (3, 4, 6),
}

RUNEX_CIRCUITS = {
    (1, 2, 6, 7), (5, 6), (2, 3, 6, 7), (1, 2, 3, 5), (1, 3, 7), (1, 4, 7), (1, 2, 3, 6),
    (2, 4, 6), (2, 3, 5, 7), (3, 4, 7), (1, 2, 5, 7), (1, 3, 4), (2, 4, 5),
}

# P_{M(H),0..7} as coefficient lists, constant term first
RUNEX_GWP = [
    [1],
    [],
    [-1, 1],
    [-6, 6],
    [-1, -1, 2],
    [28, -43, 15],
    [-31, 60, -36, 7],
    [10, -23, 19, -7, 1],
]

SIMPLEX_G = [
    [1, 0, 0, 1, 1, 0, 1],
    [0, 1, 0, 1, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 1],
]

SIMPLEX_GWP = [[1], [], [], [], [-7, 7], [], [14, -21, 7], [-8, 14, -7, 1]]

VAMOS_NONBASES = [{1, 2, 3, 4}, {1, 2, 7, 8}, {3, 4, 5, 6}, {3, 4, 7, 8}, {5, 6, 7, 8}]


def vamos_bases():
    return [c for c in combinations(range(1, 9), 4) if set(c) not in VAMOS_NONBASES]


@pytest.fixture
def runex_H():
    return matrix(field(5), RUNEX_H)


@pytest.fixture
def runex(runex_H):
    return vector_matroid(runex_H)


@pytest.fixture
def vamos():
    return read_matroid(FIXTURES / "vamos.txt")


@pytest.fixture
def simplex_G():
    return matrix(field(2), SIMPLEX_G)


def load_fixture(name):
    return read_matroid(FIXTURES / name)


def load_matrix_fixture(name):
    return read_matrix(FIXTURES / name)


def random_vector_matroid(rng: np.random.Generator, max_n: int = 8):
    """Vector matroid of a random matrix over GF(2) or GF(5)."""
    p = int(rng.choice([2, 5]))
    n = int(rng.integers(1, max_n + 1))
    rows = int(rng.integers(0, n + 1))
    entries = rng.integers(0, p, size=(rows, n)).tolist()
    return vector_matroid(matrix(field(p), entries, n))


@st.composite
def vector_matroids(draw, max_n=7):
    p = draw(st.sampled_from([2, 3, 5]))
    n = draw(st.integers(1, max_n))
    rows = draw(st.integers(0, n))
    entries = draw(
        st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n),
                 min_size=rows, max_size=rows)
    )
    return vector_matroid(matrix(field(p), entries, n))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
