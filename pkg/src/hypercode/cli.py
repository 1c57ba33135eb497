"""``hypercode`` command line.

Verbs:

* ``params FILE``: code parameters, genus, cell counts and a distance witness;
* ``gen FAMILY``: write a hypermap or code document;
* ``export FILE``: write the check matrices as alist or dense text;
* ``check FILE``: run the validation battery.

Exit codes: 0 success, 1 failed check, 2 usage or parse error, 3 invalid
hypermap, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from hypercode import families
from hypercode.css import CssCode, OrthogonalityError, ascending_search, default_budget
from hypercode.f2 import BinaryMatrix, ShapeError, mat_mul
from hypercode.homology import (
    SpecialBasis,
    default_special_basis,
    hypermap_check_matrices,
    raw_boundaries,
    special_basis,
)
from hypercode.hypermap import Hypermap, NotTransitiveError
from hypercode.io import (
    CodeDocument,
    HypermapDocument,
    ParseError,
    dense_text,
    format_code,
    format_hypermap,
    parse_document,
    to_alist,
)
from hypercode.permutations import Permutation, check_transitive

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_INVALID, EXIT_IO = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# input handling


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}", EXIT_IO) from None
    except UnicodeDecodeError as e:
        raise CliError(f"{path} is not UTF-8: {e}", EXIT_USAGE) from None


def _load(path: str):
    try:
        return parse_document(_read(path))
    except ParseError as e:
        raise CliError(f"{path}: {e}", EXIT_USAGE) from None


def _parse_special(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise CliError(f"--special expects dart numbers, got {text!r}", EXIT_USAGE) from None


def _build_hypermap(doc: HypermapDocument) -> Hypermap:
    try:
        return doc.build()
    except NotTransitiveError as e:
        raise CliError(str(e), EXIT_INVALID) from None


def _basis(doc: HypermapDocument, h: Hypermap, override: tuple[int, ...] | None) -> SpecialBasis:
    darts = override if override is not None else doc.special
    try:
        return special_basis(h, darts) if darts is not None else default_special_basis(h)
    except ValueError as e:
        raise CliError(f"invalid special darts: {e}", EXIT_USAGE) from None


@dataclass
class _Loaded:
    code: CssCode
    name: str | None
    hypermap: Hypermap | None = None
    basis: SpecialBasis | None = None


def _load_code(path: str, special: str | None) -> _Loaded:
    doc = _load(path)
    if isinstance(doc, CodeDocument):
        if special is not None:
            raise CliError("--special applies only to hypermap documents", EXIT_USAGE)
        try:
            return _Loaded(doc.build(), doc.name)
        except (OrthogonalityError, ShapeError) as e:
            raise CliError(f"{path}: {e}", EXIT_CHECK) from None
    h = _build_hypermap(doc)
    basis = _basis(doc, h, _parse_special(special))
    return _Loaded(CssCode(*hypermap_check_matrices(h, basis)), doc.name, h, basis)


def _budget(value: int | None) -> int:
    if value is not None:
        if value <= 0:
            raise CliError("--budget must be positive", EXIT_USAGE)
        return value
    try:
        return default_budget()
    except ValueError as e:
        raise CliError(str(e), EXIT_USAGE) from None


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as e:
        raise CliError(f"cannot write {path}: {e.strerror}", EXIT_IO) from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        _write(out, text)


# ---------------------------------------------------------------------------
# verbs


def cmd_params(args) -> int:
    loaded = _load_code(args.input, args.special)
    code = loaded.code
    report: dict = {"name": loaded.name, "n": code.n, "k": code.k}
    if code.k == 0:
        report.update(d=None, exhaustive=True, witness=None)
    else:
        if args.method == "ascending":
            result = ascending_search(code, budget=_budget(args.budget))
        else:
            result = code.min_distance(budget=_budget(args.budget), threads=args.threads)
        report.update(d=result.d, exhaustive=result.exhaustive)
        report["witness"] = None
        if result.witness is not None:
            columns = [j + 1 for j in result.witness.support()]
            report["witness"] = {"side": result.side, "columns": columns}
            if loaded.basis is not None:
                report["witness"]["darts"] = [loaded.basis.basis_order[j - 1] for j in columns]
    if loaded.hypermap is not None:
        h = loaded.hypermap
        v, e, f = h.counts()
        report["genus"] = h.genus
        report["cells"] = {"darts": h.n, "vertices": v, "edges": e, "faces": f}
        report["special"] = sorted(loaded.basis.special)
    else:
        report["genus"] = None
        report["cells"] = None
    if args.json:
        _emit(json.dumps(report, sort_keys=True) + "\n", args.out)
    else:
        _emit(_params_text(report), args.out)
    return EXIT_OK


def _params_text(r: dict) -> str:
    if r["k"] == 0:
        d_text, d_short = "undefined (k = 0)", "-"
    elif r["d"] is None:
        d_text, d_short = "unknown (inexhaustive)", "?"
    elif r["exhaustive"]:
        d_text, d_short = f"{r['d']} (exhaustive)", str(r["d"])
    else:
        d_text, d_short = f"d ≤ {r['d']} (inexhaustive)", f"≤{r['d']}"
    lines = []
    if r["name"]:
        lines.append(f"name: {r['name']}")
    lines.append(f"code: [{r['n']},{r['k']},{d_short}]")
    lines += [f"n: {r['n']}", f"k: {r['k']}", f"d: {d_text}"]
    if r["cells"] is not None:
        c = r["cells"]
        lines.append(f"genus: {r['genus']}")
        lines.append(f"cells: darts={c['darts']} V={c['vertices']} E={c['edges']} F={c['faces']}")
    w = r.get("witness")
    if w:
        lines.append(f"witness: {w['side']} columns {' '.join(map(str, w['columns']))}")
        if "darts" in w:
            lines.append(f"witness darts: {' '.join(map(str, w['darts']))}")
    return "\n".join(lines) + "\n"


def cmd_gen(args) -> int:
    fam = args.family
    try:
        if fam == "toric":
            _need(args, "m")
            code = families.gen_toric(args.m)
            text = format_code(code.hx, code.hz, name=f"toric-{args.m}")
        elif fam == "planar":
            _need(args, "rows", "cols")
            holes = [families.HoleSpec.parse(s) for s in args.hole]
            code = families.gen_planar(args.rows, args.cols, holes)
            label = "".join(f"_h{h.row}.{h.col}.{h.height}.{h.width}" for h in holes)
            text = format_code(code.hx, code.hz, name=f"planar-{args.rows}x{args.cols}{label}")
        elif fam == "grid-hypermap":
            _need(args, "m")
            h = families.gen_grid_hypermap(args.m)
            text = format_hypermap(h, families.grid_special_basis(h), name=f"grid-hypermap-{args.m}")
        elif fam == "honeycomb":
            _need(args, "p", "q")
            h = families.gen_honeycomb_hypermap(args.p, args.q)
            basis = families.honeycomb_special_basis(h, args.p, args.q)
            text = format_hypermap(h, basis, name=f"honeycomb-{args.p}x{args.q}")
        else:
            _need(args, "name")
            text = families.fixture_text(args.name)
    except ValueError as e:
        raise CliError(str(e), EXIT_USAGE) from None
    _emit(text, args.out)
    return EXIT_OK


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise CliError(f"gen {args.family} requires {' '.join(missing)}", EXIT_USAGE)


def cmd_export(args) -> int:
    loaded = _load_code(args.input, args.special)
    hx, hz = loaded.code.hx, loaded.code.hz
    if args.format == "alist":
        render, suffix = to_alist, "alist"
    else:
        render, suffix = dense_text, "txt"
    if args.out is None:
        raise CliError("export needs --out PREFIX", EXIT_USAGE)
    for label, m in (("hx", hx), ("hz", hz)):
        _write(f"{args.out}.{label}.{suffix}", render(m))
    return EXIT_OK


def cmd_check(args) -> int:
    doc = _load(args.input)
    if isinstance(doc, CodeDocument):
        checks = _code_checks(doc.hx, doc.hz)
    else:
        checks = _hypermap_checks(doc, _parse_special(args.special))
    ok = all(passed for _, passed, _ in checks if passed is not None)
    if args.json:
        body = {"ok": ok, "checks": [{"name": n, "passed": p, "detail": d} for n, p, d in checks]}
        _emit(json.dumps(body, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"{_mark(p)} {n}: {d}" for n, p, d in checks]
        lines.append("all checks passed" if ok else "FAILED: " + ", ".join(n for n, p, _ in checks if p is False))
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_CHECK


def _mark(passed: bool | None) -> str:
    return {True: "PASS", False: "FAIL", None: "SKIP"}[passed]


def _orthogonality(hx: BinaryMatrix, hz: BinaryMatrix) -> tuple[str, bool, str]:
    if hx.cols != hz.cols:
        return "orthogonality", False, f"H_X has {hx.cols} columns, H_Z has {hz.cols}"
    prod = mat_mul(hx, hz.T).to_dense()
    bad = [(int(i) + 1, int(j) + 1) for i, j in zip(*prod.nonzero())]
    if bad:
        return "orthogonality", False, f"{len(bad)} odd row overlaps, first at H_X row {bad[0][0]}, H_Z row {bad[0][1]}"
    return "orthogonality", True, "H_X H_Z^T = 0"


def _code_checks(hx: BinaryMatrix, hz: BinaryMatrix) -> list[tuple[str, bool | None, str]]:
    checks = [_orthogonality(hx, hz)]
    if checks[0][1]:
        k = hx.cols - hx.rank() - hz.rank()
        checks.append(("dimension", k >= 0, f"k = {k}"))
    return checks


def _hypermap_checks(doc: HypermapDocument, override) -> list[tuple[str, bool | None, str]]:
    sigma = Permutation.from_cycles(doc.sigma, doc.n)
    alpha = Permutation.from_cycles(doc.alpha, doc.n)
    if not check_transitive(sigma, alpha):
        names = ["special basis", "chain complex", "edge quotient", "orthogonality", "homology", "k = 2g", "H_Z column weight"]
        return [("transitivity", False, "<sigma, alpha> has more than one orbit")] + [(n, None, "skipped") for n in names]
    h = Hypermap(sigma, alpha)
    checks: list[tuple[str, bool | None, str]] = [("transitivity", True, f"one orbit on {h.n} darts")]
    darts = override if override is not None else doc.special
    try:
        basis = special_basis(h, darts) if darts is not None else default_special_basis(h)
        checks.append(("special basis", True, "one special dart per edge"))
    except ValueError as e:
        checks.append(("special basis", False, str(e)))
        basis = default_special_basis(h)
    d1, d2, iota = raw_boundaries(h)
    checks.append(("chain complex", mat_mul(d1, d2).is_zero(), "d1 d2 = 0 on the dart space"))
    checks.append(("edge quotient", mat_mul(d1, iota).is_zero(), "d1 vanishes on edge sums"))
    hx, hz = hypermap_check_matrices(h, basis)
    checks.append(_orthogonality(hx, hz))
    rx, rz = hx.rank(), hz.rank()
    dims = (hx.rows - rx, hx.cols - rx - rz, hz.rows - rz)
    want = (1, 2 * h.genus, 1)
    checks.append(("homology", dims == want, f"dimensions {dims}, expected {want} for genus {h.genus}"))
    k = hx.cols - rx - rz
    checks.append(("k = 2g", k == 2 * h.genus, f"k = {k}, genus = {h.genus}"))
    worst = max(hz.column_weights(), default=0)
    checks.append(("H_Z column weight", worst <= 2, f"maximum column weight {worst}"))
    return checks


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypercode", description="CSS codes from hypermaps and embedded graphs.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, special=True):
        p.add_argument("--json", action="store_true", help="emit a JSON object instead of text")
        p.add_argument("--out", help="write to this path instead of stdout")
        if special:
            p.add_argument("--special", help="special darts, one per edge (comma or space separated)")

    p = sub.add_parser("params", help="report [n,k,d], genus, cells and a distance witness")
    p.add_argument("input", help="hypermap or code document ('-' for stdin)")
    p.add_argument("--budget", type=int, help="cap on enumerated combinations (default 2^28 or $HYPERCODE_BUDGET)")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="search threads")
    p.add_argument(
        "--method",
        choices=["enumerate", "ascending"],
        default="enumerate",
        help="enumerate kernel combinations, or search supports by ascending weight (suits large n, small d)",
    )
    common(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("gen", help="generate a family member or bundled example")
    p.add_argument("family", choices=["toric", "planar", "grid-hypermap", "honeycomb", "fixture"])
    p.add_argument("--m", type=int, help="grid size (toric, grid-hypermap)")
    p.add_argument("--rows", type=int, help="vertex rows (planar)")
    p.add_argument("--cols", type=int, help="vertex columns (planar)")
    p.add_argument("--hole", action="append", default=[], help="planar hole row,col[,height,width]; repeatable")
    p.add_argument("--p", type=int, help="honeycomb rows of hexagons")
    p.add_argument("--q", type=int, help="honeycomb columns of hexagons")
    p.add_argument("--name", choices=sorted(families.FIXTURES), help="fixture name")
    p.add_argument("--out", help="write to this path instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export", help="write H_X and H_Z as PREFIX.hx.* and PREFIX.hz.*")
    p.add_argument("input")
    p.add_argument("--format", choices=["alist", "dense-text"], default="alist")
    p.add_argument("--out", help="output prefix")
    p.add_argument("--special", help="special darts, one per edge")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("check", help="run the validation battery")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) is not None and getattr(args, "threads", 1) < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except CliError as e:
        print(f"hypercode: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
