"""Combinatorial oriented hypermaps.

A hypermap is a pair of permutations ``(sigma, alpha)`` on darts
``{1..n}`` generating a transitive group. Vertices are the cycles of
``sigma``, edges the cycles of ``alpha`` and faces the cycles of
``alpha^-1 sigma``. The genus follows from
``|V| + |E| + |F| = n + 2 - 2g``.
"""

from __future__ import annotations

from functools import cached_property

from hypercode.f2 import ShapeError
from hypercode.permutations import Permutation, compose, inverse, orbit


class NotTransitiveError(ValueError):
    """``<sigma, alpha>`` has more than one orbit on the darts."""

    def __init__(self, n: int, reachable: set[int]):
        self.reachable = sorted(reachable)
        missing = sorted(set(range(1, n + 1)) - reachable)
        super().__init__(
            f"<sigma, alpha> is not transitive on 1..{n}: the orbit of dart 1 is "
            f"{self.reachable} and misses dart {missing[0]}"
        )


def _cell_index(cells: list[tuple[int, ...]], n: int) -> tuple[int, ...]:
    idx = [0] * n
    for k, cell in enumerate(cells):
        for d in cell:
            idx[d - 1] = k
    return tuple(idx)


class Hypermap:
    """Validated hypermap with cached cells.

    Constructing one checks transitivity, so every ``Hypermap`` value is
    valid. Cells are listed in canonical cycle order (each cycle starts at
    its smallest dart, cycles sorted by that dart).
    """

    def __init__(self, sigma: Permutation, alpha: Permutation):
        if sigma.n != alpha.n:
            raise ShapeError(f"sigma has {sigma.n} darts but alpha has {alpha.n}")
        if sigma.n < 1:
            raise ValueError("a hypermap needs at least one dart")
        reach = orbit(sigma, alpha)
        if len(reach) != sigma.n:
            raise NotTransitiveError(sigma.n, reach)
        self.sigma = sigma
        self.alpha = alpha
        self.face_perm = compose(inverse(alpha), sigma)
        self.vertices = sigma.cycles()
        self.edges = alpha.cycles()
        self.faces = self.face_perm.cycles()
        n = sigma.n
        self.vertex_of = _cell_index(self.vertices, n)
        self.edge_of = _cell_index(self.edges, n)
        self.face_of = _cell_index(self.faces, n)
        twice_g = n + 2 - len(self.vertices) - len(self.edges) - len(self.faces)
        assert twice_g >= 0 and twice_g % 2 == 0, f"Euler characteristic violated: 2g = {twice_g}"
        self.genus = twice_g // 2

    @property
    def n(self) -> int:
        return self.sigma.n

    @cached_property
    def alpha_inv(self) -> Permutation:
        return inverse(self.alpha)

    def cells(self) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]], list[tuple[int, ...]]]:
        return self.vertices, self.edges, self.faces

    def counts(self) -> tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.faces)

    def dual(self) -> Hypermap:
        return dual(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypermap):
            return NotImplemented
        return self.sigma == other.sigma and self.alpha == other.alpha

    def __hash__(self) -> int:
        return hash((self.sigma, self.alpha))

    def __repr__(self) -> str:
        v, e, f = self.counts()
        return f"Hypermap(n={self.n}, V={v}, E={e}, F={f}, genus={self.genus})"


def make_hypermap(n: int, sigma: Permutation, alpha: Permutation) -> Hypermap:
    if sigma.n != n or alpha.n != n:
        raise ShapeError(f"expected permutations of {n} darts, got {sigma.n} and {alpha.n}")
    return Hypermap(sigma, alpha)


def cells(h: Hypermap):
    return h.cells()


def genus(h: Hypermap) -> int:
    return h.genus


def dual(h: Hypermap) -> Hypermap:
    """The dual ``(alpha^-1 sigma, alpha^-1)``: swaps vertices and faces."""
    return Hypermap(h.face_perm, h.alpha_inv)
