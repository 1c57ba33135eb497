"""Dense linear algebra over the two-element field.

Rows are bit-packed into ``uint64`` words: column ``j`` lives in word
``j // 64`` at bit ``j % 64``. Every row operation is a word-wise XOR and
weights come from ``np.bitwise_count``.

Values are immutable; the backing arrays are marked read-only.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

WORD = 64


class ShapeError(ValueError):
    """Operands have incompatible dimensions."""


def n_words(n: int) -> int:
    return (n + WORD - 1) // WORD


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a ``(..., n)`` 0/1 array into ``(..., n_words(n))`` uint64 words."""
    bits = np.asarray(bits, dtype=np.uint8) & 1
    n = bits.shape[-1]
    width = n_words(n) * WORD
    if width != n:
        pad = [(0, 0)] * (bits.ndim - 1) + [(0, width - n)]
        bits = np.pad(bits, pad)
    packed = np.packbits(bits, axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def unpack_bits(words: np.ndarray, n: int) -> np.ndarray:
    words = np.ascontiguousarray(words, dtype="<u8")
    as_bytes = words.view(np.uint8)
    return np.unpackbits(as_bytes, axis=-1, bitorder="little")[..., :n]


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.uint64)
    a.setflags(write=False)
    return a


class BinaryVector:
    """Fixed-length vector over F2."""

    __slots__ = ("n", "words")

    def __init__(self, n: int, words: np.ndarray | None = None):
        self.n = int(n)
        if words is None:
            words = np.zeros(n_words(self.n), dtype=np.uint64)
        words = np.asarray(words, dtype=np.uint64)
        if words.shape != (n_words(self.n),):
            raise ShapeError(f"expected {n_words(self.n)} words for length {n}, got {words.shape}")
        self.words = _frozen(words)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BinaryVector:
        arr = np.fromiter((int(b) & 1 for b in bits), dtype=np.uint8)
        return cls(arr.size, pack_bits(arr))

    @classmethod
    def from_string(cls, text: str) -> BinaryVector:
        """Parse ``"1011"``; spaces are ignored."""
        text = "".join(text.split())
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a binary string: {text!r}")
        return cls.from_bits(int(ch) for ch in text)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> BinaryVector:
        """Vector with ones at the given 0-based positions (repeats cancel)."""
        bits = np.zeros(n, dtype=np.uint8)
        for i in support:
            if not 0 <= i < n:
                raise IndexError(f"position {i} out of range for length {n}")
            bits[i] ^= 1
        return cls(n, pack_bits(bits))

    @classmethod
    def zeros(cls, n: int) -> BinaryVector:
        return cls(n)

    def to_bits(self) -> np.ndarray:
        return unpack_bits(self.words, self.n)

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.to_bits())]

    def weight(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return int((int(self.words[i // WORD]) >> (i % WORD)) & 1)

    def __xor__(self, other: BinaryVector) -> BinaryVector:
        if self.n != other.n:
            raise ShapeError(f"length mismatch: {self.n} vs {other.n}")
        return BinaryVector(self.n, self.words ^ other.words)

    __add__ = __xor__

    def dot(self, other: BinaryVector) -> int:
        if self.n != other.n:
            raise ShapeError(f"length mismatch: {self.n} vs {other.n}")
        return int(np.bitwise_count(self.words & other.words).sum()) & 1

    def any(self) -> bool:
        return bool(self.words.any())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryVector):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.words, other.words))

    def __hash__(self) -> int:
        return hash((self.n, self.words.tobytes()))

    def __str__(self) -> str:
        return "".join(map(str, self.to_bits()))

    def __repr__(self) -> str:
        return f"BinaryVector('{self}')"


def weight(v: BinaryVector) -> int:
    """Hamming weight."""
    return v.weight()


class BinaryMatrix:
    """Dense F2 matrix with bit-packed rows.

    Empty shapes (zero rows or zero columns) are allowed everywhere.
    """

    __slots__ = ("rows", "cols", "data", "_rank")

    def __init__(self, rows: int, cols: int, data: np.ndarray | None = None):
        self.rows = int(rows)
        self.cols = int(cols)
        shape = (self.rows, n_words(self.cols))
        if data is None:
            data = np.zeros(shape, dtype=np.uint64)
        data = np.asarray(data, dtype=np.uint64).reshape(shape)
        self.data = _frozen(data)
        self._rank: int | None = None

    # construction

    @classmethod
    def from_dense(cls, array, cols: int | None = None) -> BinaryMatrix:
        a = np.asarray(array, dtype=np.int64)
        if a.size == 0 and a.ndim < 2:
            return cls(0, cols or 0)
        if a.ndim != 2:
            raise ShapeError(f"expected a 2D array, got shape {a.shape}")
        return cls(a.shape[0], a.shape[1], pack_bits((a & 1).astype(np.uint8)))

    @classmethod
    def from_strings(cls, lines: Sequence[str], cols: int | None = None) -> BinaryMatrix:
        rows = ["".join(line.split()) for line in lines]
        if not rows:
            return cls(0, cols or 0)
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width or any(ch not in "01" for ch in r):
                raise ValueError(f"row {i + 1} is not a binary string of length {width}: {r!r}")
        return cls.from_dense([[int(ch) for ch in r] for r in rows])

    @classmethod
    def from_rows(cls, vectors: Sequence[BinaryVector], cols: int) -> BinaryMatrix:
        for v in vectors:
            if v.n != cols:
                raise ShapeError(f"row of length {v.n} in matrix with {cols} columns")
        if not vectors:
            return cls(0, cols)
        return cls(len(vectors), cols, np.stack([v.words for v in vectors]))

    @classmethod
    def from_supports(cls, supports: Sequence[Iterable[int]], cols: int) -> BinaryMatrix:
        """Rows given as lists of 0-based column indices (repeats cancel mod 2)."""
        return cls.from_rows([BinaryVector.from_support(cols, s) for s in supports], cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BinaryMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> BinaryMatrix:
        return cls.from_dense(np.eye(n, dtype=np.uint8)) if n else cls(0, 0)

    # views

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def to_dense(self) -> np.ndarray:
        return unpack_bits(self.data, self.cols).reshape(self.rows, self.cols)

    def row(self, i: int) -> BinaryVector:
        return BinaryVector(self.cols, self.data[i])

    def row_vectors(self) -> list[BinaryVector]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> BinaryVector:
        return BinaryVector.from_bits(self.to_dense()[:, j])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return int((int(self.data[i, j // WORD]) >> (j % WORD)) & 1)

    @property
    def T(self) -> BinaryMatrix:
        return self.transpose()

    def transpose(self) -> BinaryMatrix:
        return BinaryMatrix(self.cols, self.rows, pack_bits(self.to_dense().T) if self.rows else None)

    def row_weights(self) -> list[int]:
        return [int(w) for w in np.bitwise_count(self.data).sum(axis=1)]

    def column_weights(self) -> list[int]:
        return [int(w) for w in self.to_dense().sum(axis=0)]

    def is_zero(self) -> bool:
        return not self.data.any()

    def with_bit_flipped(self, i: int, j: int) -> BinaryMatrix:
        data = self.data.copy()
        data[i, j // WORD] ^= np.uint64(1 << (j % WORD))
        return BinaryMatrix(self.rows, self.cols, data)

    def vstack(self, other: BinaryMatrix) -> BinaryMatrix:
        if self.cols != other.cols:
            raise ShapeError(f"column mismatch: {self.cols} vs {other.cols}")
        return BinaryMatrix(self.rows + other.rows, self.cols, np.vstack([self.data, other.data]))

    def rank(self) -> int:
        if self._rank is None:
            self._rank = rref(self)[1]
        return self._rank

    def apply(self, v: BinaryVector) -> BinaryVector:
        """Matrix-vector product ``M v``."""
        if v.n != self.cols:
            raise ShapeError(f"cannot apply {self.rows}x{self.cols} matrix to length-{v.n} vector")
        if self.rows == 0:
            return BinaryVector(0)
        parity = np.bitwise_count(self.data & v.words[None, :]).sum(axis=1) & 1
        return BinaryVector.from_bits(parity)

    def __matmul__(self, other: BinaryMatrix) -> BinaryMatrix:
        return mat_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data.tobytes()))

    def __str__(self) -> str:
        return "\n".join("".join(map(str, r)) for r in self.to_dense())

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.rows}x{self.cols})"


def rref(m: BinaryMatrix) -> tuple[BinaryMatrix, int, list[int]]:
    """Reduced row echelon form over F2.

    Pivots are chosen scanning columns left to right and rows top down, so
    the output is canonical.

    Returns:
        ``(R, rank, pivots)`` where ``pivots`` are 0-based pivot columns in
        increasing order, one per nonzero row of ``R``.
    """
    data = np.array(m.data, dtype=np.uint64, copy=True)
    pivots: list[int] = []
    r = 0
    for col in range(m.cols):
        if r == m.rows:
            break
        w = col // WORD
        mask = np.uint64(1 << (col % WORD))
        hits = np.flatnonzero(data[r:, w] & mask)
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            data[[r, p]] = data[[p, r]]
        others = np.flatnonzero(data[:, w] & mask)
        others = others[others != r]
        if others.size:
            data[others] ^= data[r]
        pivots.append(col)
        r += 1
    return BinaryMatrix(m.rows, m.cols, data), len(pivots), pivots


def rank(m: BinaryMatrix) -> int:
    return m.rank()


def nullspace_basis(m: BinaryMatrix) -> list[BinaryVector]:
    """Basis of ``{v : M v = 0}``, one vector per free column in increasing order."""
    r, rk, pivots = rref(m)
    dense = r.to_dense()[:rk] if rk else np.zeros((0, m.cols), dtype=np.uint8)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        bits = np.zeros(m.cols, dtype=np.uint8)
        bits[f] = 1
        for i, p in enumerate(pivots):
            bits[p] = dense[i, f]
        basis.append(BinaryVector(m.cols, pack_bits(bits)))
    return basis


def mat_mul(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    """Product ``A B`` with XOR accumulation."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = np.zeros((a.rows, n_words(b.cols)), dtype=np.uint64)
    if a.rows and b.rows and b.cols:
        dense = a.to_dense().astype(bool)
        for i in range(a.rows):
            idx = np.flatnonzero(dense[i])
            if idx.size:
                out[i] = np.bitwise_xor.reduce(b.data[idx], axis=0)
    return BinaryMatrix(a.rows, b.cols, out)


def in_row_space(m: BinaryMatrix, v: BinaryVector) -> bool:
    """Whether ``v`` is a sum of rows of ``m``."""
    return m.vstack(BinaryMatrix.from_rows([v], m.cols)).rank() == m.rank()


def solve(m: BinaryMatrix, b: BinaryVector) -> BinaryVector | None:
    """One solution ``x`` of ``M x = b`` (free variables zero), or None."""
    if b.n != m.rows:
        raise ShapeError(f"right-hand side of length {b.n} for {m.rows} equations")
    aug = BinaryMatrix.from_dense(np.hstack([m.to_dense(), b.to_bits()[:, None]]))
    r, _, pivots = rref(aug)
    if m.cols in pivots:
        return None
    dense = r.to_dense()
    bits = np.zeros(m.cols, dtype=np.uint8)
    for i, p in enumerate(pivots):
        bits[p] = dense[i, m.cols]
    return BinaryVector(m.cols, pack_bits(bits))
