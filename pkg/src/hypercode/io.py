"""Text formats: hypermap documents, code documents, alist and dense text.

Hypermap document (UTF-8, ``#`` starts a comment)::

    name octagon-square
    darts 24
    sigma (1 24 20)(2 14 9)...
    alpha (1 2 3)(4 5 6)...
    special 3 6 9 12 15 18 21 24

``name`` and ``special`` are optional; ``special`` lists one dart per edge.

Code document::

    name steane
    code 7
    HX 3
    0001111
    0110011
    1010101
    HZ 3
    ...

Parsing only checks syntax; ``build()`` turns a document into a validated
``Hypermap`` or ``CssCode`` so callers decide when validation errors fire.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from hypercode.f2 import BinaryMatrix
from hypercode.hypermap import Hypermap
from hypercode.permutations import CycleParseError, Permutation, parse_cycles


class ParseError(ValueError):
    """Syntax error with a 1-based ``line`` and ``column``."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class HypermapDocument:
    n: int
    sigma: tuple[tuple[int, ...], ...]
    alpha: tuple[tuple[int, ...], ...]
    special: tuple[int, ...] | None = None
    name: str | None = None

    def build(self) -> Hypermap:
        return Hypermap(
            Permutation.from_cycles(self.sigma, self.n),
            Permutation.from_cycles(self.alpha, self.n),
        )

    def special_basis(self, h: Hypermap | None = None):
        from hypercode.homology import default_special_basis, special_basis

        h = h or self.build()
        if self.special is None:
            return default_special_basis(h)
        return special_basis(h, self.special)


@dataclass(frozen=True)
class CodeDocument:
    hx: BinaryMatrix
    hz: BinaryMatrix
    name: str | None = None

    @property
    def n(self) -> int:
        return self.hx.cols

    def build(self):
        from hypercode.css import CssCode

        return CssCode(self.hx, self.hz)


_LINE = re.compile(r"(\S+)\s*(.*)")


def _content_lines(text: str):
    """Yield ``(line_no, keyword, rest, rest_column)`` skipping blanks and comments."""
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        m = _LINE.match(line.lstrip())
        if not m:
            continue
        indent = len(line) - len(line.lstrip())
        yield no, m.group(1), m.group(2), indent + m.start(2) + 1


def _int_arg(rest: str, no: int, col: int, what: str) -> int:
    if not re.fullmatch(r"\d+", rest.strip()):
        raise ParseError(f"{what} expects a non-negative integer, got {rest.strip()!r}", no, col)
    return int(rest)


def parse_document(text: str) -> HypermapDocument | CodeDocument:
    """Parse either document kind, chosen by the first keyword after ``name``."""
    lines = list(_content_lines(text))
    for _, kw, _, _ in lines:
        if kw == "name":
            continue
        if kw == "code":
            return _parse_code(lines)
        return _parse_hypermap(lines)
    raise ParseError("empty document", 1)


def parse_hypermap_document(text: str) -> HypermapDocument:
    doc = parse_document(text)
    if not isinstance(doc, HypermapDocument):
        raise ParseError("expected a hypermap document, found a code document", 1)
    return doc


def _parse_hypermap(lines) -> HypermapDocument:
    fields: dict[str, tuple[int, str, int]] = {}
    for no, kw, rest, col in lines:
        if kw not in ("name", "darts", "sigma", "alpha", "special"):
            raise ParseError(f"unknown keyword {kw!r}", no)
        if kw in fields:
            raise ParseError(f"duplicate {kw!r} line", no)
        fields[kw] = (no, rest, col)
    for kw in ("darts", "sigma", "alpha"):
        if kw not in fields:
            last = lines[-1][0] if lines else 1
            raise ParseError(f"missing required {kw!r} line", last)
    no, rest, col = fields["darts"]
    n = _int_arg(rest, no, col, "darts")
    if n < 1:
        raise ParseError("darts must be at least 1", no, col)
    perms = {}
    for kw in ("sigma", "alpha"):
        no, rest, col = fields[kw]
        try:
            perms[kw] = tuple(parse_cycles(rest, n))
        except CycleParseError as e:
            raise ParseError(f"{kw}: {str(e).split(': ', 1)[1]}", no, col + e.column - 1) from None
    special = None
    if "special" in fields:
        no, rest, col = fields["special"]
        special = []
        for m in re.finditer(r"\S+", rest):
            tok = m.group(0)
            if not tok.isdigit() or not 1 <= int(tok) <= n:
                raise ParseError(f"special dart {tok!r} outside 1..{n}", no, col + m.start())
            special.append(int(tok))
        special = tuple(special)
    name = fields["name"][1].strip() if "name" in fields else None
    return HypermapDocument(n, perms["sigma"], perms["alpha"], special, name)


def _parse_code(lines) -> CodeDocument:
    name = None
    n = None
    mats: dict[str, BinaryMatrix] = {}
    i = 0
    while i < len(lines):
        no, kw, rest, col = lines[i]
        i += 1
        if kw == "name":
            name = rest.strip()
        elif kw == "code":
            n = _int_arg(rest, no, col, "code")
        elif kw in ("HX", "HZ"):
            if n is None:
                raise ParseError(f"{kw} before the 'code' line", no)
            if kw in mats:
                raise ParseError(f"duplicate {kw} block", no)
            r = _int_arg(rest, no, col, kw)
            rows = []
            for _ in range(r):
                if i >= len(lines):
                    raise ParseError(f"{kw} block ends after {len(rows)} of {r} rows", no)
                rno, word, tail, _ = lines[i]
                i += 1
                bits = word + "".join(tail.split())
                bad = next((k for k, ch in enumerate(bits) if ch not in "01"), None)
                if bad is not None:
                    raise ParseError(f"{kw} row contains {bits[bad]!r}", rno, bad + 1)
                if len(bits) != n:
                    raise ParseError(f"{kw} row has {len(bits)} entries, expected {n}", rno)
                rows.append(bits)
            mats[kw] = BinaryMatrix.from_strings(rows) if rows else BinaryMatrix(0, n)
        else:
            raise ParseError(f"unknown keyword {kw!r}", no)
    for kw in ("HX", "HZ"):
        if kw not in mats:
            raise ParseError(f"missing {kw} block", lines[-1][0])
    return CodeDocument(mats["HX"], mats["HZ"], name)


def format_hypermap(h: Hypermap, special=None, name: str | None = None) -> str:
    """Hypermap document text. ``special`` is a ``SpecialBasis`` or dart list."""
    out = []
    if name:
        out.append(f"name {name}")
    out += [f"darts {h.n}", f"sigma {h.sigma.format()}", f"alpha {h.alpha.format()}"]
    if special is not None:
        darts = sorted(getattr(special, "special", special))
        out.append("special " + " ".join(map(str, darts)))
    return "\n".join(out) + "\n"


def format_document(doc: HypermapDocument) -> str:
    out = []
    if doc.name:
        out.append(f"name {doc.name}")
    fmt = lambda cycles: "".join("(" + " ".join(map(str, c)) + ")" for c in cycles) or "()"  # noqa: E731
    out += [f"darts {doc.n}", f"sigma {fmt(doc.sigma)}", f"alpha {fmt(doc.alpha)}"]
    if doc.special is not None:
        out.append("special " + " ".join(map(str, doc.special)))
    return "\n".join(out) + "\n"


def format_code(hx: BinaryMatrix, hz: BinaryMatrix, name: str | None = None) -> str:
    out = [f"name {name}"] if name else []
    out.append(f"code {hx.cols}")
    for label, m in (("HX", hx), ("HZ", hz)):
        out.append(f"{label} {m.rows}")
        out += [line for line in str(m).splitlines()] if m.rows else []
    return "\n".join(out) + "\n"


def dense_text(m: BinaryMatrix) -> str:
    return str(m) + "\n" if m.rows else ""


def to_alist(m: BinaryMatrix) -> str:
    """Alist text; index lists are padded with zeros to the maximum degree."""
    dense = m.to_dense()
    col_sets = [[i + 1 for i in range(m.rows) if dense[i, j]] for j in range(m.cols)]
    row_sets = [[j + 1 for j in range(m.cols) if dense[i, j]] for i in range(m.rows)]
    max_c = max((len(s) for s in col_sets), default=0)
    max_r = max((len(s) for s in row_sets), default=0)

    def pad(s, width):
        return " ".join(map(str, s + [0] * (width - len(s))))

    lines = [
        f"{m.cols} {m.rows}",
        f"{max_c} {max_r}",
        " ".join(str(len(s)) for s in col_sets),
        " ".join(str(len(s)) for s in row_sets),
    ]
    lines += [pad(s, max_c) for s in col_sets]
    lines += [pad(s, max_r) for s in row_sets]
    return "\n".join(lines) + "\n"


def from_alist(text: str) -> BinaryMatrix:
    """Inverse of ``to_alist``; zero entries in index lists are padding."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    cols, rows = map(int, lines[0])
    col_lists = lines[4 : 4 + cols]
    supports: list[list[int]] = [[] for _ in range(rows)]
    for j, entries in enumerate(col_lists):
        for e in map(int, entries):
            if e:
                supports[e - 1].append(j)
    return BinaryMatrix.from_supports(supports, cols)
