"""Permutations of the dart set ``{1, ..., n}``.

Products follow the left-to-right convention used for hypermaps:
``compose(p, q)`` is "first ``p``, then ``q``", so ``compose(p, q)(i) ==
q(p(i))``. The face permutation of a hypermap, written ``alpha^-1 sigma``,
is therefore ``compose(inverse(alpha), sigma)``.

Cycle notation is ``"(1 8 3 6)(2 5 4 7)"``: whitespace-separated darts,
fixed points optional on input.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from hypercode.f2 import ShapeError


class CycleParseError(ValueError):
    """Malformed cycle notation. ``column`` is 1-based within the parsed text."""

    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``{1..n}``; ``images[i - 1]`` is the image of dart ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"images {list(self.images)} are not a permutation of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for d in cyc:
                if not 1 <= d <= n:
                    raise ValueError(f"dart {d} outside 1..{n}")
                if d in seen:
                    raise ValueError(f"dart {d} appears twice")
                seen.add(d)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, n: int) -> Permutation:
        return cls.from_cycles(parse_cycles(text, n), n)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        return cycle_decomposition(self)

    def format(self, include_fixed: bool = False) -> str:
        parts = [
            "(" + " ".join(map(str, c)) + ")"
            for c in self.cycles()
            if include_fixed or len(c) > 1
        ]
        return "".join(parts) if parts else "()"

    def __str__(self) -> str:
        return self.format()

    def then(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        return inverse(self)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product ``pq``: apply ``p`` first, then ``q``."""
    if p.n != q.n:
        raise ShapeError(f"cannot compose permutations of {p.n} and {q.n} darts")
    return Permutation(tuple(q.images[v - 1] for v in p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, v in enumerate(p.images, 1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def cycle_decomposition(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its minimum, sorted by that minimum.

    Fixed points appear as 1-cycles.
    """
    seen = [False] * (p.n + 1)
    out = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = p(d)
        out.append(tuple(cyc))
    return out


def orbit(sigma: Permutation, alpha: Permutation, start: int = 1) -> set[int]:
    """Orbit of ``start`` under the group generated by ``sigma`` and ``alpha``."""
    if sigma.n != alpha.n:
        raise ShapeError(f"generator sizes differ: {sigma.n} vs {alpha.n}")
    reached = {start}
    work = [start]
    while work:
        i = work.pop()
        for j in (sigma(i), alpha(i)):
            if j not in reached:
                reached.add(j)
                work.append(j)
    return reached


def check_transitive(sigma: Permutation, alpha: Permutation) -> bool:
    """Whether ``<sigma, alpha>`` acts transitively on ``{1..n}``.

    Orbit closure from dart 1 with a work-list; forward images suffice for
    finite permutation groups.
    """
    if sigma.n != alpha.n:
        raise ShapeError(f"generator sizes differ: {sigma.n} vs {alpha.n}")
    if sigma.n == 0:
        return False
    return len(orbit(sigma, alpha)) == sigma.n


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(\S))")


def parse_cycles(text: str, n: int) -> list[tuple[int, ...]]:
    """Parse cycle notation into a list of dart tuples.

    ``"()"`` and the empty string denote the identity.
    """
    cycles: list[tuple[int, ...]] = []
    current: list[int] | None = None
    open_col = 0
    seen: set[int] = set()
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        col = m.start(m.lastindex) + 1
        pos = m.end()
        if m.group(1):
            if current is not None:
                raise CycleParseError("nested '('", col)
            current, open_col = [], col
        elif m.group(2):
            if current is None:
                raise CycleParseError("')' without matching '('", col)
            if current:
                cycles.append(tuple(current))
            current = None
        elif m.group(3):
            if current is None:
                raise CycleParseError("dart outside a cycle", col)
            d = int(m.group(3))
            if not 1 <= d <= n:
                raise CycleParseError(f"dart {d} outside 1..{n}", col)
            if d in seen:
                raise CycleParseError(f"dart {d} repeated", col)
            seen.add(d)
            current.append(d)
        else:
            raise CycleParseError(f"unexpected character {m.group(4)!r}", col)
    if current is not None:
        raise CycleParseError("unclosed '('", open_col)
    return cycles
