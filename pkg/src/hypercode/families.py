"""Generators for code families and bundled example objects.

Two kinds of output:

* ``CssCode`` values built from embedded graphs (toric and planar grids);
* ``Hypermap`` values on the torus (square-grid and honeycomb hypermaps),
  which turn into codes through ``hypermap_check_matrices``.

Lattice conventions shared by the hypermap generators: node ``(r, c)`` has
index ``t = r * cols + c``, rows grow downward, and darts are numbered
row-major, node by node, with the link to the right before the link below.
"""

from __future__ import annotations

import hashlib
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from importlib import resources
from itertools import combinations

from hypercode.css import CssCode
from hypercode.homology import SpecialBasis, map_check_matrices, special_basis
from hypercode.hypermap import Hypermap
from hypercode.permutations import Permutation

# ---------------------------------------------------------------------------
# toric grid


def gen_toric(m: int) -> CssCode:
    """Toric code of the ``m x m`` square grid on the torus: ``[2m^2, 2, m]``.

    Vertex ``(r, c)`` is row ``r * m + c`` of ``H_X``. The edge to the right
    of ``(r, c)`` is column ``2(r * m + c)`` and the edge below it column
    ``2(r * m + c) + 1``. Face ``(r, c)`` has ``(r, c)`` as its top-left corner.
    """
    if m < 2:
        raise ValueError(f"toric grid needs m >= 2, got {m}")

    def right(r, c):
        return 2 * ((r % m) * m + c % m)

    def down(r, c):
        return right(r, c) + 1

    vertex_edge = []
    face_edge = []
    for r in range(m):
        for c in range(m):
            vertex_edge.append([right(r, c), right(r, c - 1), down(r, c), down(r - 1, c)])
            face_edge.append([right(r, c), right(r + 1, c), down(r, c), down(r, c + 1)])
    return CssCode(*map_check_matrices(vertex_edge, face_edge, 2 * m * m))


# ---------------------------------------------------------------------------
# planar grid with rectangular holes


@dataclass(frozen=True)
class HoleSpec:
    """Rectangle of removed faces; ``(row, col)`` is its top-left face, 1-based."""

    row: int
    col: int
    height: int = 1
    width: int = 1

    @property
    def perimeter(self) -> int:
        return 2 * (self.height + self.width)

    def faces(self) -> set[tuple[int, int]]:
        return {
            (i, j)
            for i in range(self.row, self.row + self.height)
            for j in range(self.col, self.col + self.width)
        }

    def corner_box(self) -> tuple[int, int, int, int]:
        """Closed vertex rectangle ``(r0, c0, r1, c1)`` in 0-based vertex coordinates."""
        return self.row - 1, self.col - 1, self.row + self.height - 1, self.col + self.width - 1

    @classmethod
    def parse(cls, text: str) -> HoleSpec:
        """``"row,col[,height,width]"``."""
        parts = [int(p) for p in text.split(",")]
        if len(parts) not in (2, 4):
            raise ValueError(f"hole must be row,col or row,col,height,width: {text!r}")
        return cls(*parts)


@dataclass(frozen=True)
class GridGeometry:
    """Planar ``rows x cols`` vertex grid and its edge numbering.

    Horizontal edges come first, row by row, then vertical edges, row by row.
    Faces are 1-based ``(i, j)`` with ``1 <= i < rows`` and ``1 <= j < cols``;
    face ``(i, j)`` spans vertex rows ``i - 1, i`` and columns ``j - 1, j``.
    """

    rows: int
    cols: int

    @property
    def n_vertices(self) -> int:
        return self.rows * self.cols

    @property
    def n_edges(self) -> int:
        return (self.rows - 1) * self.cols + (self.cols - 1) * self.rows

    def vertex(self, r: int, c: int) -> int:
        return r * self.cols + c

    def horizontal(self, r: int, c: int) -> int:
        """Edge ``(r, c) - (r, c + 1)``."""
        return r * (self.cols - 1) + c

    def vertical(self, r: int, c: int) -> int:
        """Edge ``(r, c) - (r + 1, c)``."""
        return self.rows * (self.cols - 1) + r * self.cols + c

    def edge_ends(self, e: int) -> tuple[tuple[int, int], tuple[int, int]]:
        split = self.rows * (self.cols - 1)
        if e < split:
            r, c = divmod(e, self.cols - 1)
            return (r, c), (r, c + 1)
        r, c = divmod(e - split, self.cols)
        return (r, c), (r + 1, c)

    def face_edges(self, i: int, j: int) -> list[int]:
        r, c = i - 1, j - 1
        return [self.horizontal(r, c), self.horizontal(r + 1, c), self.vertical(r, c), self.vertical(r, c + 1)]

    def faces(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.rows) for j in range(1, self.cols)]


def validate_holes(geom: GridGeometry, holes: Sequence[HoleSpec]) -> None:
    """Raise ``ValueError`` naming the first violated placement rule."""
    for h in holes:
        if h.height < 1 or h.width < 1:
            raise ValueError(f"hole {h} has an empty rectangle")
        if h.row < 2 or h.col < 2 or h.row + h.height > geom.rows - 1 or h.col + h.width > geom.cols - 1:
            raise ValueError(f"hole {h} must lie strictly inside the {geom.rows - 1}x{geom.cols - 1} face grid")
    for a, b in combinations(holes, 2):
        ar0, ac0, ar1, ac1 = a.corner_box()
        br0, bc0, br1, bc1 = b.corner_box()
        if ar0 <= br1 and br0 <= ar1 and ac0 <= bc1 and bc0 <= ac1:
            raise ValueError(f"holes {a} and {b} overlap or share a vertex")


def _removed_cells(geom: GridGeometry, holes: Sequence[HoleSpec]) -> tuple[set[int], set[int], set[tuple[int, int]]]:
    """Vertices, edges and faces strictly inside the holes."""
    vertices: set[int] = set()
    edges: set[int] = set()
    faces: set[tuple[int, int]] = set()
    for h in holes:
        r0, c0, r1, c1 = h.corner_box()
        faces |= h.faces()
        for r in range(r0 + 1, r1):
            for c in range(c0 + 1, c1):
                vertices.add(geom.vertex(r, c))
        for r in range(r0 + 1, r1):
            for c in range(c0, c1):
                edges.add(geom.horizontal(r, c))
        for r in range(r0, r1):
            for c in range(c0 + 1, c1):
                edges.add(geom.vertical(r, c))
    return vertices, edges, faces


def gen_planar(rows: int, cols: int, holes: Sequence[HoleSpec] = ()) -> CssCode:
    """Planar code on a ``rows x cols`` vertex grid with rectangular holes.

    ``H_X`` is the vertex-edge incidence of what remains after deleting the
    hole interiors; ``H_Z`` has one row per remaining face (no outer face and
    no hole faces). Edge columns are renumbered densely in ``GridGeometry``
    order. The code encodes one qubit per hole.
    """
    if rows < 3 or cols < 3:
        raise ValueError(f"planar grid must be at least 3x3, got {rows}x{cols}")
    geom = GridGeometry(rows, cols)
    holes = list(holes)
    validate_holes(geom, holes)
    gone_v, gone_e, gone_f = _removed_cells(geom, holes)
    kept = [e for e in range(geom.n_edges) if e not in gone_e]
    column = {e: j for j, e in enumerate(kept)}
    incident: dict[int, list[int]] = {v: [] for v in range(geom.n_vertices) if v not in gone_v}
    for e in kept:
        for r, c in geom.edge_ends(e):
            incident[geom.vertex(r, c)].append(column[e])
    face_edge = [[column[e] for e in geom.face_edges(i, j)] for i, j in geom.faces() if (i, j) not in gone_f]
    return CssCode(*map_check_matrices(list(incident.values()), face_edge, len(kept)))


def planar_formula_distance(rows: int, cols: int, holes: Sequence[HoleSpec]) -> int:
    """Shortest nontrivial logical from the geometry alone.

    The lighter of the smallest hole perimeter and the fewest edges crossed by
    a path of adjacent faces joining a hole to another hole or to the outside.
    """
    geom = GridGeometry(rows, cols)
    holes = list(holes)
    if not holes:
        raise ValueError("a planar code without holes has no logical operators")
    validate_holes(geom, holes)
    outside = ("outside",)
    region: dict[tuple[int, int], tuple] = {}
    for k, h in enumerate(holes):
        for f in h.faces():
            region[f] = ("hole", k)

    def node(i, j):
        if not (1 <= i < rows and 1 <= j < cols):
            return outside
        return region.get((i, j), (i, j))

    def neighbours(v):
        cells = holes[v[1]].faces() if v[0] == "hole" else [v]
        for i, j in cells:
            for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                w = node(i + di, j + dj)
                if w != v:
                    yield w

    best = min(h.perimeter for h in holes)
    for k in range(len(holes)):
        src = ("hole", k)
        dist = {src: 0}
        queue = deque([src])
        while queue:
            v = queue.popleft()
            if v != src and (v == outside or v[0] == "hole"):
                best = min(best, dist[v])
                continue
            for w in neighbours(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
    return best


# ---------------------------------------------------------------------------
# hypermaps on the torus


def _perm(images: dict[int, int], n: int) -> Permutation:
    return Permutation(tuple(images[i] for i in range(1, n + 1)))


def gen_grid_hypermap(m: int) -> Hypermap:
    """Square-grid hypermap on the ``m x m`` torus lattice, ``m`` even.

    Lattice nodes with ``r + c`` even are hypermap vertices, the others are
    hypermap edges. Dart ``2t + 1`` is the link from node ``t`` to its right
    neighbour and dart ``2t + 2`` the link to the node below. ``sigma`` turns
    counterclockwise around vertex nodes (right, up, left, down) and
    ``alpha`` clockwise around edge nodes (right, down, left, up).
    """
    if m < 2 or m % 2:
        raise ValueError(f"grid hypermap needs an even m >= 2, got {m}")
    n = 2 * m * m

    def t(r, c):
        return (r % m) * m + c % m

    sigma: dict[int, int] = {}
    alpha: dict[int, int] = {}
    for r in range(m):
        for c in range(m):
            right, down = 2 * t(r, c) + 1, 2 * t(r, c) + 2
            left, up = 2 * t(r, c - 1) + 1, 2 * t(r - 1, c) + 2
            if (r + c) % 2 == 0:
                cycle, target = (right, up, left, down), sigma
            else:
                cycle, target = (right, down, left, up), alpha
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                target[a] = b
    return Hypermap(_perm(sigma, n), _perm(alpha, n))


def grid_special_basis(h: Hypermap) -> SpecialBasis:
    """The dart below each edge node of a grid hypermap (even labels)."""
    return special_basis(h, [d for e in h.edges for d in e if _is_down_dart_of_edge(h, d)])


def _is_down_dart_of_edge(h: Hypermap, d: int) -> bool:
    m = int(round((h.n // 2) ** 0.5))
    t = (d - 1) // 2
    r, c = divmod(t, m)
    return d % 2 == 0 and (r + c) % 2 == 1


def grid_horizontal_cycle(m: int, row: int = 0) -> list[int]:
    """Darts of the horizontal lattice line through row ``row``."""
    return [2 * (row * m + c) + 1 for c in range(m)]


@dataclass(frozen=True)
class HoneycombLayout:
    """Brick-wall lattice behind ``gen_honeycomb_hypermap``.

    ``rows x cols`` nodes on the torus. Every node links to its left and
    right neighbours; node ``(r, c)`` with ``r + c`` even also links to the
    node below, so every node has degree three. Even nodes are hypermap
    vertices, odd nodes hypermap edges.
    """

    rows: int
    cols: int

    def node(self, r: int, c: int) -> int:
        return (r % self.rows) * self.cols + c % self.cols

    def darts(self) -> tuple[dict[int, int], dict[int, int]]:
        """Maps from node index to the dart of its right link and its down link."""
        right: dict[int, int] = {}
        down: dict[int, int] = {}
        label = 0
        for r in range(self.rows):
            for c in range(self.cols):
                t = self.node(r, c)
                label += 1
                right[t] = label
                if (r + c) % 2 == 0:
                    label += 1
                    down[t] = label
        return right, down


def gen_honeycomb_hypermap(p: int, q: int) -> Hypermap:
    """Honeycomb hypermap with ``p * q`` hexagonal faces on the torus.

    Built on a ``p x 2q`` brick wall (see ``HoneycombLayout``). ``p`` must be
    even so the two node classes close up around the torus. ``sigma`` visits
    right, left, down at each vertex node; ``alpha`` visits right, left, up
    at each edge node.
    """
    if p < 2 or q < 2:
        raise ValueError(f"honeycomb needs p, q >= 2, got p={p}, q={q}")
    if p % 2:
        raise ValueError(f"honeycomb needs an even p so the lattice 2-colours on the torus, got {p}")
    lay = HoneycombLayout(p, 2 * q)
    right, down = lay.darts()
    n = len(right) + len(down)
    sigma: dict[int, int] = {}
    alpha: dict[int, int] = {}
    for r in range(lay.rows):
        for c in range(lay.cols):
            t = lay.node(r, c)
            to_right, to_left = right[t], right[lay.node(r, c - 1)]
            if (r + c) % 2 == 0:
                cycle, target = (to_right, to_left, down[t]), sigma
            else:
                cycle, target = (to_right, to_left, down[lay.node(r - 1, c)]), alpha
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                target[a] = b
    return Hypermap(_perm(sigma, n), _perm(alpha, n))


def honeycomb_special_basis(h: Hypermap, p: int, q: int) -> SpecialBasis:
    """The right-hand link of every edge node as its special dart."""
    lay = HoneycombLayout(p, 2 * q)
    right, _ = lay.darts()
    chosen = [right[lay.node(r, c)] for r in range(p) for c in range(2 * q) if (r + c) % 2]
    return special_basis(h, chosen)


# ---------------------------------------------------------------------------
# bundled examples

FIXTURES = {
    "steane": "steane.code",
    "torus8": "torus8.hmap",
    "octagon-square": "octagon-square.hmap",
    "dlcube": "dlcube.hmap",
}


class FixtureIntegrityError(RuntimeError):
    """A bundled data file does not match its recorded checksum."""


def fixture_dir():
    return resources.files("hypercode") / "fixtures"


def fixture_text(name: str, base=None) -> str:
    """Raw text of a bundled fixture, checked against ``SHA256SUMS``.

    ``base`` overrides the directory holding the data files and checksums.
    """
    if name not in FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; choose from {', '.join(sorted(FIXTURES))}")
    base = fixture_dir() if base is None else base
    sums = {}
    for line in (base / "SHA256SUMS").read_text(encoding="utf-8").splitlines():
        digest, fname = line.split()
        sums[fname] = digest
    fname = FIXTURES[name]
    raw = (base / fname).read_bytes()
    if hashlib.sha256(raw).hexdigest() != sums.get(fname):
        raise FixtureIntegrityError(f"fixture file {fname} does not match SHA256SUMS")
    return raw.decode("utf-8")


def fixture(name: str):
    """Bundled example: a ``CssCode`` for ``steane``, a ``Hypermap`` otherwise."""
    from hypercode.io import parse_document

    return parse_document(fixture_text(name)).build()
