"""CSS codes and exact minimum distance.

``min_distance`` enumerates every combination of a nullspace basis of one
check matrix and keeps the lightest combination that is not a stabilizer,
first for ``ker H_X`` and then for ``ker H_Z``. Combinations are visited in
natural binary order of their coefficient vector; a table of the ``2^16``
low-order combinations is built once by doubling and each block of high
bits contributes one XOR offset, so a block of candidates costs a handful of
vectorized word operations.

``min_distance_oracle`` reaches the same number by an unrelated route: it
searches supports of increasing weight directly, pairing halves of the
support through matching syndromes, and tests non-triviality by reduction
against the row space of the other check matrix.
"""

from __future__ import annotations

import math
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from hypercode.f2 import (
    BinaryMatrix,
    BinaryVector,
    ShapeError,
    in_row_space,
    mat_mul,
    nullspace_basis,
    rref,
)

DEFAULT_BUDGET = 1 << 28
BUDGET_ENV = "HYPERCODE_BUDGET"
LOW_BITS = 16


class OrthogonalityError(ValueError):
    """``H_X H_Z^T != 0``. ``pair`` holds the 1-based offending rows."""

    def __init__(self, x_row: int, z_row: int):
        self.pair = (x_row, z_row)
        super().__init__(f"row {x_row} of H_X and row {z_row} of H_Z overlap an odd number of times")


class NoLogicalQubitsError(ValueError):
    """Distance requested for a code that encodes nothing."""


class InconclusiveSearchError(RuntimeError):
    """The oracle ran out of budget before finding a logical operator."""


class DistanceNotComputedError(RuntimeError):
    """A witness was requested before an exhaustive distance search."""


def default_budget() -> int:
    """Candidate cap, overridable through the ``HYPERCODE_BUDGET`` variable."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {raw!r}")
    return value


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a distance search.

    Attributes:
        d: minimum weight found; an upper bound when ``exhaustive`` is false,
            None if nothing was found before the budget ran out.
        exhaustive: every combination on both sides was visited.
        witness: a logical operator of weight ``d``.
        side: ``"X"`` when the witness lies in ``ker H_X`` outside the row
            space of ``H_Z``, ``"Z"`` for the mirror case.
        d_x, d_z: per-side minima (None when a side was not finished).
        candidates: combinations visited.
        elapsed: wall time in seconds.
    """

    d: int | None
    exhaustive: bool
    witness: BinaryVector | None
    side: str | None
    d_x: int | None
    d_z: int | None
    candidates: int
    elapsed: float


class CssCode:
    """CSS code from two check matrices with ``H_X H_Z^T = 0``."""

    def __init__(self, hx: BinaryMatrix, hz: BinaryMatrix):
        if hx.cols != hz.cols:
            raise ShapeError(f"H_X has {hx.cols} columns but H_Z has {hz.cols}")
        prod = mat_mul(hx, hz.T)
        if not prod.is_zero():
            i, j = map(int, np.argwhere(prod.to_dense())[0])
            raise OrthogonalityError(i + 1, j + 1)
        self.hx = hx
        self.hz = hz
        self._lock = threading.Lock()
        self._distance: DistanceResult | None = None

    @property
    def n(self) -> int:
        return self.hx.cols

    @cached_property
    def k(self) -> int:
        return self.n - self.hx.rank() - self.hz.rank()

    @cached_property
    def kernel_x(self) -> list[BinaryVector]:
        return nullspace_basis(self.hx)

    @cached_property
    def kernel_z(self) -> list[BinaryVector]:
        return nullspace_basis(self.hz)

    @property
    def cached_distance(self) -> DistanceResult | None:
        return self._distance

    def min_distance(self, budget: int | None = None, threads: int | None = None) -> DistanceResult:
        """Exact distance, cached after the first exhaustive search."""
        if self._distance is not None:
            return self._distance
        result = min_distance(self, budget=budget, threads=threads)
        if result.exhaustive:
            with self._lock:
                if self._distance is None:
                    self._distance = result
            return self._distance
        return result

    def parameters(self, budget: int | None = None, threads: int | None = None) -> tuple[int, int, int | None]:
        return self.n, self.k, self.min_distance(budget, threads).d

    def swapped(self) -> CssCode:
        return CssCode(self.hz, self.hx)

    def __repr__(self) -> str:
        return f"CssCode(n={self.n}, k={self.k})"


def make_css(hx: BinaryMatrix, hz: BinaryMatrix) -> CssCode:
    return CssCode(hx, hz)


# ---------------------------------------------------------------------------
# generator enumeration


def _stack(vectors: list[BinaryVector], n: int) -> np.ndarray:
    if not vectors:
        return np.zeros((0, (n + 63) // 64), dtype=np.uint64)
    return np.stack([v.words for v in vectors]).astype(np.uint64)


def _subset_table(rows: np.ndarray, bits: int) -> np.ndarray:
    """XOR of every subset of the first ``bits`` rows, indexed by subset mask."""
    table = np.zeros((1 << bits, rows.shape[1]), dtype=np.uint64)
    for j in range(bits):
        half = 1 << j
        table[half : 2 * half] = table[:half] ^ rows[j]
    return table


class _SideSearch:
    """Lightest ``c = G u`` with ``s(u) != 0`` over ``u`` in natural order.

    ``gens`` rows are the kernel generators and ``sigs`` rows their
    signatures: coordinate ``i`` of ``s(u)`` is the inner product of
    ``c`` with generator ``i`` of the other kernel, which is nonzero exactly
    when ``c`` is not in the row space of the other check matrix.
    """

    def __init__(self, gens: np.ndarray, sigs: np.ndarray):
        self.k = gens.shape[0]
        self.low = min(self.k, LOW_BITS)
        self.gens = gens
        self.sigs = sigs
        self.table_c = _subset_table(gens, self.low)
        self.table_s = _subset_table(sigs, self.low)

    @property
    def total(self) -> int:
        return 1 << self.k

    def _offset(self, hi: int) -> tuple[np.ndarray, np.ndarray]:
        oc = np.zeros(self.gens.shape[1], dtype=np.uint64)
        os_ = np.zeros(self.sigs.shape[1], dtype=np.uint64)
        j = self.low
        while hi:
            if hi & 1:
                oc ^= self.gens[j]
                os_ ^= self.sigs[j]
            hi >>= 1
            j += 1
        return oc, os_

    def scan(self, start: int, stop: int) -> tuple[int, int]:
        """Best ``(weight, index)`` over indices ``start <= t < stop``."""
        block = 1 << self.low
        best = (math.inf, -1)
        t = start
        while t < stop:
            hi, lo = divmod(t, block)
            size = min(block - lo, stop - t)
            oc, os_ = self._offset(hi)
            logical = (self.table_s[lo : lo + size] ^ os_).any(axis=1)
            if logical.any():
                weights = np.bitwise_count(self.table_c[lo : lo + size] ^ oc).sum(axis=1, dtype=np.int64)
                weights = np.where(logical, weights, np.iinfo(np.int64).max)
                i = int(np.argmin(weights))
                w = int(weights[i])
                if logical[i] and (w, t + i) < best:
                    best = (w, t + i)
            t += size
        return best

    def vector(self, index: int, n: int) -> BinaryVector:
        c = np.zeros(self.gens.shape[1], dtype=np.uint64)
        for j in range(self.k):
            if index >> j & 1:
                c ^= self.gens[j]
        return BinaryVector(n, c)


def _parallel_scan(search: _SideSearch, stop: int, threads: int) -> tuple[int, int]:
    block = 1 << search.low
    n_blocks = -(-stop // block)
    if threads <= 1 or n_blocks <= 1:
        return search.scan(0, stop)
    parts = min(threads, n_blocks)
    edges = [min(stop, (n_blocks * p // parts) * block) for p in range(parts + 1)]
    with ThreadPoolExecutor(max_workers=parts) as pool:
        results = list(pool.map(lambda p: search.scan(edges[p], edges[p + 1]), range(parts)))
    return min(results)


def _signatures(gens: list[BinaryVector], dual_gens: list[BinaryVector]) -> np.ndarray:
    """Row ``i`` packs the inner products of ``gens[i]`` with every ``dual_gens[j]``."""
    m = len(dual_gens)
    if not gens:
        return np.zeros((0, (m + 63) // 64), dtype=np.uint64)
    a = BinaryMatrix.from_rows(gens, gens[0].n)
    b = BinaryMatrix.from_rows(dual_gens, gens[0].n)
    return np.array(mat_mul(a, b.T).data, dtype=np.uint64)


def min_distance(code: CssCode, budget: int | None = None, threads: int | None = None) -> DistanceResult:
    """Minimum weight of a nontrivial logical operator by generator enumeration.

    Args:
        code: the code; must encode at least one qubit.
        budget: cap on combinations visited across both sides. When reached,
            the lightest operator seen so far is reported with
            ``exhaustive=False``.
        threads: worker threads; results do not depend on this value.

    Raises:
        NoLogicalQubitsError: ``k == 0``.
        ValueError: ``budget`` is not positive.
    """
    if budget is None:
        budget = default_budget()
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    if threads is None:
        threads = os.cpu_count() or 1
    if code.k == 0:
        raise NoLogicalQubitsError("the code has k = 0; there is no logical operator")
    t0 = time.perf_counter()
    gx, gz = code.kernel_x, code.kernel_z
    sides = (
        ("X", gx, _signatures(gx, gz)),
        ("Z", gz, _signatures(gz, gx)),
    )
    remaining = budget
    visited = 0
    exhaustive = True
    found: dict[str, tuple[int, int, _SideSearch]] = {}
    minima: dict[str, int | None] = {"X": None, "Z": None}
    for name, gens, sigs in sides:
        search = _SideSearch(_stack(gens, code.n), sigs)
        stop = min(search.total, remaining)
        if stop < search.total:
            exhaustive = False
        if stop > 0:
            w, t = _parallel_scan(search, stop, threads)
            if t >= 0:
                found[name] = (w, t, search)
        visited += stop
        remaining -= stop
        if stop == search.total and name in found:
            minima[name] = found[name][0]
    best = None
    for name in ("X", "Z"):
        if name in found and (best is None or found[name][0] < found[best][0]):
            best = name
    witness = None
    d = None
    if best is not None:
        w, t, search = found[best]
        d = w
        witness = search.vector(t, code.n)
    return DistanceResult(
        d=d,
        exhaustive=exhaustive,
        witness=witness,
        side=best,
        d_x=minima["X"],
        d_z=minima["Z"],
        candidates=visited,
        elapsed=time.perf_counter() - t0,
    )


def is_logical(code: CssCode, c: BinaryVector, side: str) -> bool:
    """``c`` is a nontrivial logical on the given side."""
    h, other = (code.hx, code.hz) if side == "X" else (code.hz, code.hx)
    return not h.apply(c).any() and not in_row_space(other, c)


def distance_witness(code: CssCode) -> tuple[BinaryVector, str]:
    """Witness of the cached exhaustive distance, re-checked before return."""
    result = code.cached_distance
    if result is None:
        raise DistanceNotComputedError("run an exhaustive min_distance first")
    if not is_logical(code, result.witness, result.side) or result.witness.weight() != result.d:
        raise AssertionError("cached witness fails the logical-operator check")
    return result.witness, result.side


# ---------------------------------------------------------------------------
# independent oracle


def _column_syndromes(h: BinaryMatrix) -> list[int]:
    dense = h.to_dense()
    return [int("".join(map(str, dense[::-1, j])) or "0", 2) for j in range(h.cols)]


class _RowSpace:
    """Membership in the row space of a matrix by reduction against its RREF."""

    def __init__(self, h: BinaryMatrix):
        r, rk, pivots = rref(h)
        self.rows = [(1 << p, _to_int(r.row(i))) for i, p in enumerate(pivots)]

    def __contains__(self, c: int) -> bool:
        for bit, row in self.rows:
            if c & bit:
                c ^= row
        return c == 0


def _to_int(v: BinaryVector) -> int:
    return int.from_bytes(np.ascontiguousarray(v.words, dtype="<u8").tobytes(), "little")


def _logical_of_weight(syn: list[int], stabilizers: _RowSpace, w: int) -> int | None:
    """Support mask of the first weight-``w`` logical in enumeration order, if any."""
    n = len(syn)
    a = w // 2
    halves: dict[int, list[tuple[int, int]]] = {}
    for left in combinations(range(n), a):
        s = 0
        mask = 0
        for j in left:
            s ^= syn[j]
            mask |= 1 << j
        halves.setdefault(s, []).append((left[-1] if left else -1, mask))
    for right in combinations(range(n), w - a):
        s = 0
        mask = 0
        for j in right:
            s ^= syn[j]
            mask |= 1 << j
        for top, left_mask in halves.get(s, ()):
            if top < right[0] and (left_mask | mask) not in stabilizers:
                return left_mask | mask
    return None


def ascending_search(code: CssCode, budget: int | None = None) -> DistanceResult:
    """Weight-ascending search returning a full ``DistanceResult``.

    Every weight ``w`` is tried on the X side and then the Z side before
    ``w + 1``. The cost of a weight level is the number of half-supports
    enumerated; if it would push the total past ``budget`` the search stops
    and reports ``exhaustive=False`` with ``d=None``.
    """
    if budget is None:
        budget = default_budget()
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    if code.k == 0:
        raise NoLogicalQubitsError("the code has k = 0; there is no logical operator")
    t0 = time.perf_counter()
    n = code.n
    sides = (
        ("X", _column_syndromes(code.hx), _RowSpace(code.hz)),
        ("Z", _column_syndromes(code.hz), _RowSpace(code.hx)),
    )
    spent = 0
    for w in range(1, n + 1):
        cost = 2 * (math.comb(n, w // 2) + math.comb(n, w - w // 2))
        if spent + cost > budget:
            return DistanceResult(None, False, None, None, None, None, spent, time.perf_counter() - t0)
        spent += cost
        for name, syn, stabilizers in sides:
            mask = _logical_of_weight(syn, stabilizers, w)
            if mask is not None:
                witness = BinaryVector.from_support(n, (j for j in range(n) if mask >> j & 1))
                return DistanceResult(w, True, witness, name, None, None, spent, time.perf_counter() - t0)
    raise AssertionError("k > 0 but no logical operator exists")


def min_distance_oracle(code: CssCode, budget: int | None = None) -> int:
    """Distance by weight-ascending search over supports.

    Independent of the nullspace bases used by ``min_distance``: candidates
    are checked against ``H_X`` or ``H_Z`` directly and non-triviality is
    decided by reduction against the other matrix's row echelon form.

    Raises:
        NoLogicalQubitsError: ``k == 0``.
        InconclusiveSearchError: budget exhausted before a logical was found.
    """
    result = ascending_search(code, budget)
    if result.d is None:
        raise InconclusiveSearchError(f"no logical found within budget {budget or default_budget()}")
    return result.d
