"""Print [n, k, d] for every bundled fixture and family instance.

Usage:
    python3 scripts/reproduce_parameters.py [--budget N] [--threads T]
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from hypercode.css import CssCode, ascending_search
from hypercode.families import (
    HoleSpec,
    fixture,
    gen_grid_hypermap,
    gen_honeycomb_hypermap,
    gen_planar,
    gen_toric,
    grid_special_basis,
    honeycomb_special_basis,
    planar_formula_distance,
)
from hypercode.homology import hypermap_check_matrices


@dataclass
class RunConfig:
    budget: int | None = None
    threads: int = 1
    toric_sizes: tuple[int, ...] = (2, 3, 4)
    grid_sizes: tuple[int, ...] = (2, 4)
    honeycomb_sizes: tuple[tuple[int, int], ...] = ((2, 2), (4, 4))
    planar_layouts: list[tuple[int, int, list[HoleSpec]]] = field(
        default_factory=lambda: [
            (5, 5, [HoleSpec(2, 2)]),
            (3, 3, []),
            (9, 9, [HoleSpec(4, 3), HoleSpec(4, 7)]),
            (8, 12, [HoleSpec(4, 4), HoleSpec(4, 8)]),
        ]
    )


def instances(cfg: RunConfig):
    yield "steane", fixture("steane"), ""
    for name in ("torus8", "octagon-square", "dlcube"):
        yield name, CssCode(*hypermap_check_matrices(fixture(name))), ""
    for m in cfg.toric_sizes:
        yield f"toric m={m}", gen_toric(m), ""
    for m in cfg.grid_sizes:
        h = gen_grid_hypermap(m)
        yield f"grid-hypermap m={m}", CssCode(*hypermap_check_matrices(h, grid_special_basis(h))), ""
    for p, q in cfg.honeycomb_sizes:
        h = gen_honeycomb_hypermap(p, q)
        code = CssCode(*hypermap_check_matrices(h, honeycomb_special_basis(h, p, q)))
        yield f"honeycomb {p}x{q}", code, ""
    for rows, cols, holes in cfg.planar_layouts:
        spec = " ".join(f"{h.row},{h.col}" for h in holes) or "none"
        note = f"formula d={planar_formula_distance(rows, cols, holes)}" if holes else ""
        yield f"planar {rows}x{cols} holes {spec}", gen_planar(rows, cols, holes), note


def describe(code: CssCode, cfg: RunConfig) -> str:
    if code.k == 0:
        return f"[{code.n},0,-]"
    if code.n <= 64:
        result = code.min_distance(budget=cfg.budget, threads=cfg.threads)
    else:
        result = ascending_search(code, budget=cfg.budget)
    if result.exhaustive:
        d = result.d
    else:
        d = "?" if result.d is None else f"<={result.d}"
    return f"[{code.n},{code.k},{d}]"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--budget", type=int, default=None)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()
    cfg = RunConfig(budget=args.budget, threads=args.threads)
    for name, code, note in instances(cfg):
        start = time.perf_counter()
        params = describe(code, cfg)
        line = f"{name:<32} {params:<14} {time.perf_counter() - start:6.2f} s"
        print(f"{line}  {note}".rstrip())


if __name__ == "__main__":
    main()
