"""Boundary operators and check matrices.

Three constructions feed the CSS layer:

* a generic two-step F2 chain complex ``C2 -> C1 -> C0``;
* a graph embedded in a surface, given by vertex-edge and face-edge
  incidence lists;
* a hypermap, whose dart space ``W`` is taken modulo the edge sums and
  written in a *special basis*: one dart per edge is dropped and rewritten
  as the sum of the other darts of its edge.

Dart sums are ``BinaryVector`` values of length ``n`` where bit ``i - 1``
stands for dart ``i``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from hypercode.f2 import BinaryMatrix, BinaryVector, ShapeError, mat_mul
from hypercode.hypermap import Hypermap

DartSum = BinaryVector


class ChainComplexError(ValueError):
    """The composite boundary ``d1 d2`` is not zero."""


class InvalidEmbeddingError(ValueError):
    """Incidence data does not describe a closed surface complex."""


class NotACycleError(ValueError):
    """A dart sum handed to a weight function is not a classical cycle."""


def dart_sum(n: int, darts: Iterable[int]) -> DartSum:
    """Sum of the given darts (1-based labels; repeats cancel)."""
    return BinaryVector.from_support(n, (d - 1 for d in darts))


def darts_of(x: DartSum) -> list[int]:
    return [i + 1 for i in x.support()]


@dataclass(frozen=True)
class ChainComplexF2:
    """``C2 --d2--> C1 --d1--> C0`` over F2 with ``d1 d2 = 0``.

    The CSS code on ``C1`` takes ``H_X = d1`` and ``H_Z = d2^T``; coboundaries
    are plain transposes.
    """

    d2: BinaryMatrix
    d1: BinaryMatrix
    labels: tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]] | None = None

    def __post_init__(self):
        if self.d1.cols != self.d2.rows:
            raise ShapeError(f"d1 is {self.d1.shape} but d2 is {self.d2.shape}")
        if not mat_mul(self.d1, self.d2).is_zero():
            raise ChainComplexError("d1 d2 != 0")

    @property
    def dims(self) -> tuple[int, int, int]:
        return self.d1.rows, self.d1.cols, self.d2.cols

    def check_matrices(self) -> tuple[BinaryMatrix, BinaryMatrix]:
        return self.d1, self.d2.T

    def homology_dims(self) -> tuple[int, int, int]:
        c0, c1, c2 = self.dims
        r1, r2 = self.d1.rank(), self.d2.rank()
        return c0 - r1, c1 - r1 - r2, c2 - r2

    def css_code(self):
        from hypercode.css import CssCode

        return CssCode(*self.check_matrices())


# ---------------------------------------------------------------------------
# embedded graphs


def map_check_matrices(
    vertex_edge: Sequence[Iterable[int]],
    face_edge: Sequence[Iterable[int]],
    n_edges: int | None = None,
) -> tuple[BinaryMatrix, BinaryMatrix]:
    """Vertex-edge and face-edge incidence matrices of an embedded graph.

    Args:
        vertex_edge: for each vertex, the 0-based indices of incident edges.
        face_edge: for each face, the 0-based indices of its boundary edges.
        n_edges: number of edges; inferred from the largest index if omitted.

    Raises:
        InvalidEmbeddingError: an index is out of range, an edge meets more
            than two vertices or faces, or ``H_X H_Z^T != 0``.
    """
    vertex_edge = [list(r) for r in vertex_edge]
    face_edge = [list(r) for r in face_edge]
    if n_edges is None:
        n_edges = 1 + max((e for r in vertex_edge + face_edge for e in r), default=-1)
    for name, rows in (("vertex", vertex_edge), ("face", face_edge)):
        count = [0] * n_edges
        for i, r in enumerate(rows):
            for e in set(r):
                if not 0 <= e < n_edges:
                    raise InvalidEmbeddingError(f"{name} {i + 1} references edge {e + 1} of {n_edges}")
                count[e] += 1
        over = [e + 1 for e, c in enumerate(count) if c > 2]
        if over:
            raise InvalidEmbeddingError(f"edge {over[0]} lies on {count[over[0] - 1]} {name} rows")
    hx = BinaryMatrix.from_supports(vertex_edge, n_edges)
    hz = BinaryMatrix.from_supports(face_edge, n_edges)
    prod = mat_mul(hx, hz.T)
    if not prod.is_zero():
        i, j = map(int, np.argwhere(prod.to_dense())[0])
        raise InvalidEmbeddingError(
            f"vertex {i + 1} and face {j + 1} share an odd number of edges; H_X H_Z^T != 0"
        )
    return hx, hz


# ---------------------------------------------------------------------------
# hypermaps


def raw_boundaries(h: Hypermap) -> tuple[BinaryMatrix, BinaryMatrix, BinaryMatrix]:
    """``(d1, d2, iota)`` on the full dart space.

    ``d1`` is ``|V| x n`` with ``d1(w_i) = v(i) + v(alpha^-1(i))``; ``d2`` is
    ``n x |F|`` (face indicators as columns); ``iota`` is ``n x |E|``.
    """
    n = h.n
    a_inv = h.alpha_inv
    d1_cols = [[h.vertex_of[i - 1], h.vertex_of[a_inv(i) - 1]] for i in range(1, n + 1)]
    d1 = BinaryMatrix.from_supports(d1_cols, len(h.vertices)).T
    d2 = BinaryMatrix.from_supports([[d - 1 for d in f] for f in h.faces], n).T
    iota = BinaryMatrix.from_supports([[d - 1 for d in e] for e in h.edges], n).T
    return d1, d2, iota


def bipartite_boundaries(h: Hypermap) -> tuple[BinaryMatrix, BinaryMatrix]:
    """Boundaries of the embedded bipartite (Walsh) graph.

    ``dbar1`` is ``(|V| + |E|) x n`` with ``dbar1(w_i) = v(i) + e(i)`` (vertex
    rows first); ``dbar2`` is ``n x |F|`` with
    ``dbar2(f) = sum_{i in f} w_i + w_{alpha^-1(i)}``.
    """
    nv = len(h.vertices)
    cols = [[h.vertex_of[i], nv + h.edge_of[i]] for i in range(h.n)]
    dbar1 = BinaryMatrix.from_supports(cols, nv + len(h.edges)).T
    a_inv = h.alpha_inv
    faces = [[d - 1 for d in f] + [a_inv(d) - 1 for d in f] for f in h.faces]
    dbar2 = BinaryMatrix.from_supports(faces, h.n).T
    return dbar1, dbar2


@dataclass(frozen=True)
class SpecialBasis:
    """One chosen dart per edge; the remaining darts index the quotient basis.

    ``special[k]`` is the special dart of edge ``k`` (canonical edge order).
    ``basis_order`` lists non-special darts in increasing order; it gives the
    column order of the hypermap check matrices.
    """

    hypermap: Hypermap
    special: tuple[int, ...]
    basis_order: tuple[int, ...] = field(init=False)
    column_of: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        h = self.hypermap
        if len(self.special) != len(h.edges):
            raise ValueError(f"need one special dart per edge: {len(h.edges)} edges, {len(self.special)} darts")
        for k, (s, e) in enumerate(zip(self.special, h.edges)):
            if s not in e:
                raise ValueError(f"special dart {s} does not lie on edge {k + 1} {e}")
        chosen = set(self.special)
        order = tuple(d for d in range(1, h.n + 1) if d not in chosen)
        object.__setattr__(self, "basis_order", order)
        object.__setattr__(self, "column_of", {d: j for j, d in enumerate(order)})

    @property
    def dimension(self) -> int:
        return len(self.basis_order)

    def special_of_dart(self, d: int) -> int:
        return self.special[self.hypermap.edge_of[d - 1]]

    def is_special(self, d: int) -> bool:
        return self.special_of_dart(d) == d


def special_basis(h: Hypermap, darts: Iterable[int]) -> SpecialBasis:
    """Special basis from an unordered set of darts hitting each edge once."""
    darts = list(darts)
    per_edge: list[int | None] = [None] * len(h.edges)
    for d in darts:
        if not 1 <= d <= h.n:
            raise ValueError(f"special dart {d} outside 1..{h.n}")
        k = h.edge_of[d - 1]
        if per_edge[k] is not None:
            raise ValueError(f"edge {k + 1} {h.edges[k]} has two special darts: {per_edge[k]} and {d}")
        per_edge[k] = d
    missing = [k for k, d in enumerate(per_edge) if d is None]
    if missing:
        raise ValueError(f"edge {missing[0] + 1} {h.edges[missing[0]]} has no special dart")
    return SpecialBasis(h, tuple(per_edge))


def default_special_basis(h: Hypermap) -> SpecialBasis:
    """Largest dart label on each edge."""
    return SpecialBasis(h, tuple(max(e) for e in h.edges))


def to_quotient(basis: SpecialBasis, x: DartSum) -> BinaryVector:
    """Coordinates of ``x + iota(E)`` in the special basis."""
    h = basis.hypermap
    bits = x.to_bits().copy()
    for s, e in zip(basis.special, h.edges):
        if bits[s - 1]:
            for d in e:
                bits[d - 1] ^= 1
    return BinaryVector.from_bits(bits[[d - 1 for d in basis.basis_order]])


def from_quotient(basis: SpecialBasis, q: BinaryVector) -> DartSum:
    """Representative dart sum with no special darts."""
    return dart_sum(basis.hypermap.n, (basis.basis_order[j] for j in q.support()))


def hypermap_check_matrices(
    h: Hypermap, basis: SpecialBasis | None = None
) -> tuple[BinaryMatrix, BinaryMatrix]:
    """``(H_X, H_Z)`` for the hypermap in the given special basis.

    ``H_X`` is ``|V| x (n - |E|)`` and ``H_Z`` is ``|F| x (n - |E|)``; columns
    follow ``basis.basis_order``, rows the canonical vertex and face order.
    """
    if basis is None:
        basis = default_special_basis(h)
    elif basis.hypermap != h:
        raise ValueError("special basis belongs to a different hypermap")
    d1, d2, _ = raw_boundaries(h)
    keep = [d - 1 for d in basis.basis_order]
    hx = BinaryMatrix.from_dense(d1.to_dense()[:, keep]) if keep else BinaryMatrix(d1.rows, 0)
    face_rows = d2.T.row_vectors()
    hz = BinaryMatrix.from_rows([to_quotient(basis, f) for f in face_rows], len(keep))
    return hx, hz


def homology_dimensions(h: Hypermap, basis: SpecialBasis | None = None) -> tuple[int, int, int]:
    hx, hz = hypermap_check_matrices(h, basis)
    rx, rz = hx.rank(), hz.rank()
    return hx.rows - rx, hx.cols - rx - rz, hz.rows - rz


# ---------------------------------------------------------------------------
# weights in the special basis


def mu(basis: SpecialBasis, q: BinaryVector) -> DartSum:
    """Send a quotient class to its classical cycle: ``w_i -> w_i + w_{alpha^-1(i)}``."""
    h = basis.hypermap
    a_inv = h.alpha_inv
    darts = []
    for j in q.support():
        i = basis.basis_order[j]
        darts += [i, a_inv(i)]
    return dart_sum(h.n, darts)


def is_classical_cycle(h: Hypermap, x: DartSum) -> bool:
    """Every vertex and every edge meets ``x`` an even number of times."""
    return _even_on(h.vertices, x) and _even_on(h.edges, x)


def is_dual_classical_cycle(h: Hypermap, y: DartSum) -> bool:
    """Classical cycle of the dual hypermap: even on every face and every edge."""
    return _even_on(h.faces, y) and _even_on(h.edges, y)


def _even_on(cells: list[tuple[int, ...]], x: DartSum) -> bool:
    bits = x.to_bits()
    return all(sum(int(bits[d - 1]) for d in c) % 2 == 0 for c in cells)


def _check_length(h: Hypermap, x: DartSum) -> None:
    if x.n != h.n:
        raise ShapeError(f"dart sum of length {x.n} for a hypermap with {h.n} darts")


def lift(basis: SpecialBasis, x: DartSum) -> DartSum:
    """The special-dart-free representative of ``mu^-1(x)``.

    Around each edge the darts of ``x`` are paired going counterclockwise
    (the ``alpha^-1`` direction), starting just past the special dart so that
    the special dart is never strictly inside a pair and, when it belongs to
    ``x``, closes one. Each pair contributes its opening dart plus the darts it
    skips over.
    """
    h = basis.hypermap
    _check_length(h, x)
    if not is_classical_cycle(h, x):
        raise NotACycleError("x is not a classical cycle of the bipartite representation")
    bits = x.to_bits()
    a_inv = h.alpha_inv
    out: list[int] = []
    for s in basis.special:
        walk = [a_inv(s)]
        while walk[-1] != s:
            walk.append(a_inv(walk[-1]))
        open_dart = None
        for d in walk:
            if bits[d - 1]:
                if open_dart is None:
                    open_dart = d
                    out.append(d)
                else:
                    open_dart = None
            elif open_dart is not None:
                out.append(d)
    return dart_sum(h.n, out)


def lift_weight(basis: SpecialBasis, x: DartSum) -> int:
    """Special-basis weight of ``mu^-1(x)``: half of ``wt(x)`` plus skipped darts."""
    return lift(basis, x).weight()


def dual_cycle_weight(basis: SpecialBasis, y: DartSum) -> int:
    """Length of a dual classical cycle counting special darts as zero."""
    h = basis.hypermap
    _check_length(h, y)
    if not is_dual_classical_cycle(h, y):
        raise NotACycleError("y is not a classical cycle of the dual hypermap")
    special = set(basis.special)
    return sum(1 for d in darts_of(y) if d not in special)
