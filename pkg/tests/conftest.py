from __future__ import annotations

import random
from itertools import product

import pytest
from hypothesis import assume
from hypothesis import strategies as st

from hypercode.f2 import BinaryMatrix, BinaryVector, nullspace_basis
from hypercode.homology import bipartite_boundaries, mu
from hypercode.hypermap import Hypermap
from hypercode.permutations import Permutation, check_transitive

OCTAGON_SIGMA = "(1 24 20)(2 14 9)(3 11 13)(4 18 23)(5 21 17)(6 7 10)(8 16 12)(15 19 22)"
OCTAGON_ALPHA = "".join(f"({3 * i + 1} {3 * i + 2} {3 * i + 3})" for i in range(8))

OCTAGON_HX = [
    "1100000000000110",
    "0100100001000000",
    "1000000111000000",
    "0011000000100001",
    "0001000000011000",
    "0010111100000000",
    "0000011000110000",
    "0000000010001111",
]
OCTAGON_HZ = [
    "1011000100001100",
    "0110100000000011",
    "1100000001000000",
    "0001000000110000",
    "0000011000000000",
    "0000110011100001",
    "0000001110011000",
    "0000000000000110",
]
HAMMING = ["0001111", "0110011", "1010101"]


def octagon_square() -> Hypermap:
    return Hypermap(Permutation.parse(OCTAGON_SIGMA, 24), Permutation.parse(OCTAGON_ALPHA, 24))


def torus8() -> Hypermap:
    return Hypermap(Permutation.parse("(1 8 3 6)(2 5 4 7)", 8), Permutation.parse("(1 2 3 4)(5 6 7 8)", 8))


def hamming() -> BinaryMatrix:
    return BinaryMatrix.from_strings(HAMMING)


def random_hypermap(rng: random.Random, n: int) -> Hypermap:
    """Uniform pair of permutations, redrawn until transitive."""
    while True:
        s = list(range(1, n + 1))
        a = list(range(1, n + 1))
        rng.shuffle(s)
        rng.shuffle(a)
        sigma, alpha = Permutation(tuple(s)), Permutation(tuple(a))
        if check_transitive(sigma, alpha):
            return Hypermap(sigma, alpha)


def brute_lift_weight(basis, x: BinaryVector) -> int:
    """Minimum weight of a quotient vector q with mu(q) == x, by enumeration."""
    best = None
    for bits in product((0, 1), repeat=basis.dimension):
        q = BinaryVector.from_bits(bits)
        if mu(basis, q) == x and (best is None or q.weight() < best):
            best = q.weight()
    return best


def all_cycles(h):
    """Every x in the kernel of the bipartite boundary dbar1."""
    dbar1, _ = bipartite_boundaries(h)
    basis = nullspace_basis(dbar1)
    for coeffs in product((0, 1), repeat=len(basis)):
        x = BinaryVector.zeros(h.n)
        for c, v in zip(coeffs, basis):
            if c:
                x = x ^ v
        yield x


permutations_of = lambda n: st.permutations(range(1, n + 1)).map(lambda p: Permutation(tuple(p)))  # noqa: E731


@st.composite
def hypermaps(draw, min_n: int = 1, max_n: int = 12) -> Hypermap:
    n = draw(st.integers(min_n, max_n))
    sigma = draw(permutations_of(n))
    alpha = draw(permutations_of(n))
    assume(check_transitive(sigma, alpha))
    return Hypermap(sigma, alpha)


@st.composite
def binary_matrices(draw, max_rows: int = 8, max_cols: int = 12, min_rows: int = 0, min_cols: int = 0):
    rows = draw(st.integers(min_rows, max_rows))
    cols = draw(st.integers(min_cols, max_cols))
    bits = draw(st.lists(st.lists(st.integers(0, 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return BinaryMatrix.from_dense(bits) if rows else BinaryMatrix(0, cols)


@pytest.fixture
def octagon() -> Hypermap:
    return octagon_square()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
