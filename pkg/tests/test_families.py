from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercode import families
from hypercode.css import CssCode, min_distance_oracle
from hypercode.families import (
    GridGeometry,
    HoleSpec,
    fixture,
    gen_grid_hypermap,
    gen_honeycomb_hypermap,
    gen_planar,
    gen_toric,
    grid_special_basis,
    honeycomb_special_basis,
    planar_formula_distance,
    validate_holes,
)
from hypercode.homology import default_special_basis, hypermap_check_matrices
from hypercode.hypermap import Hypermap

# ---------------------------------------------------------------------------
# toric


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_toric_regular_and_two_qubits(m):
    code = gen_toric(m)
    assert code.n == 2 * m * m and code.k == 2
    assert set(code.hx.column_weights()) == {2}
    assert set(code.hx.row_weights()) == {4}
    assert set(code.hz.row_weights()) == {4}


@pytest.mark.parametrize("m, d", [(2, 2), (3, 3), (4, 4)])
def test_toric_distance(m, d):
    assert gen_toric(m).min_distance().d == d


def test_toric_m2_distance_by_oracle():
    assert min_distance_oracle(gen_toric(2)) == 2


def test_toric_rejects_small_grid():
    with pytest.raises(ValueError):
        gen_toric(1)


# ---------------------------------------------------------------------------
# planar


def test_planar_single_hole():
    holes = [HoleSpec(2, 2)]
    code = gen_planar(5, 5, holes)
    assert code.k == 1
    assert min_distance_oracle(code) == 2 == planar_formula_distance(5, 5, holes)


def test_planar_without_holes_encodes_nothing():
    assert gen_planar(3, 3).k == 0


def test_planar_two_holes_four_apart_on_nine_by_nine():
    holes = [HoleSpec(4, 3), HoleSpec(4, 7)]
    code = gen_planar(9, 9, holes)
    assert code.k == 2
    assert min_distance_oracle(code) == planar_formula_distance(9, 9, holes) == 2


def test_planar_two_holes_reaching_distance_four():
    holes = [HoleSpec(4, 4), HoleSpec(4, 8)]
    code = gen_planar(8, 12, holes)
    assert code.k == 2
    assert min_distance_oracle(code) == planar_formula_distance(8, 12, holes) == 4


def test_nine_by_nine_cannot_reach_four_with_two_unit_holes():
    """Exhaustive over placements: the best two-hole layout on 9x9 has d = 3."""
    spots = [HoleSpec(i, j) for i in range(2, 8) for j in range(2, 8)]
    best = 0
    geom = GridGeometry(9, 9)
    for a in range(len(spots)):
        for b in range(a + 1, len(spots)):
            try:
                validate_holes(geom, [spots[a], spots[b]])
            except ValueError:
                continue
            best = max(best, planar_formula_distance(9, 9, [spots[a], spots[b]]))
    assert best == 3


def test_planar_large_hole_perimeter_counts():
    holes = [HoleSpec(3, 3, 2, 2)]
    code = gen_planar(8, 8, holes)
    assert code.k == 1
    assert min_distance_oracle(code) == planar_formula_distance(8, 8, holes) == 3


@pytest.mark.parametrize(
    "holes, message",
    [
        ([HoleSpec(1, 2)], "strictly inside"),
        ([HoleSpec(2, 2, 3, 1)], "strictly inside"),
        ([HoleSpec(2, 2), HoleSpec(3, 3)], "share a vertex"),
        ([HoleSpec(2, 2, 0, 1)], "empty"),
    ],
)
def test_planar_hole_validation(holes, message):
    with pytest.raises(ValueError, match=message):
        gen_planar(5, 5, holes)


def test_geometry_edge_count():
    g = GridGeometry(4, 6)
    assert g.n_edges == 3 * 6 + 5 * 4
    assert all(g.edge_ends(g.horizontal(r, c)) == ((r, c), (r, c + 1)) for r in range(4) for c in range(5))
    assert all(g.edge_ends(g.vertical(r, c)) == ((r, c), (r + 1, c)) for r in range(3) for c in range(6))


def random_holes(rng: random.Random, rows: int, cols: int) -> list[HoleSpec]:
    geom = GridGeometry(rows, cols)
    holes: list[HoleSpec] = []
    for _ in range(8):
        h = HoleSpec(rng.randint(2, rows - 2), rng.randint(2, cols - 2), rng.randint(1, 2), rng.randint(1, 2))
        try:
            validate_holes(geom, holes + [h])
        except ValueError:
            continue
        holes.append(h)
    return holes


@settings(max_examples=60, deadline=None)
@given(st.integers(5, 9), st.integers(5, 9), st.randoms(use_true_random=False))
def test_planar_encodes_one_qubit_per_hole(rows, cols, rng):
    holes = random_holes(rng, rows, cols)
    assert gen_planar(rows, cols, holes).k == len(holes)


@pytest.mark.parametrize("seed", range(6))
def test_planar_formula_agrees_with_search(seed):
    rng = random.Random(seed)
    holes = random_holes(rng, 7, 7)
    if not holes:
        pytest.skip("no hole fitted")
    code = gen_planar(7, 7, holes)
    assert min_distance_oracle(code) == planar_formula_distance(7, 7, holes)


# ---------------------------------------------------------------------------
# hypermaps on the torus


@pytest.mark.parametrize("m", [2, 4, 6])
def test_grid_hypermap_counts(m):
    h = gen_grid_hypermap(m)
    assert h.n == 2 * m * m
    assert h.counts() == (m * m // 2, m * m // 2, m * m)
    assert h.genus == 1
    code = CssCode(*hypermap_check_matrices(h, grid_special_basis(h)))
    assert code.n == 3 * m * m // 2 and code.k == 2
    assert max(code.hz.column_weights()) <= 2


@pytest.mark.parametrize("m, d", [(2, 2), (4, 4)])
def test_grid_hypermap_distance(m, d):
    h = gen_grid_hypermap(m)
    code = CssCode(*hypermap_check_matrices(h, grid_special_basis(h)))
    assert code.min_distance().d == d


def test_grid_special_darts_are_below_edge_nodes():
    h = gen_grid_hypermap(4)
    basis = grid_special_basis(h)
    assert all(d % 2 == 0 for d in basis.special)


@pytest.mark.parametrize("m", [0, 1, 3, 5])
def test_grid_hypermap_rejects_odd_or_small(m):
    with pytest.raises(ValueError):
        gen_grid_hypermap(m)


@pytest.mark.parametrize("p, q, darts", [(2, 2, 12), (4, 4, 48), (2, 3, 18), (4, 6, 72)])
def test_honeycomb_counts(p, q, darts):
    h = gen_honeycomb_hypermap(p, q)
    assert h.n == darts
    assert h.counts() == (p * q, p * q, p * q)
    assert h.genus == 1
    assert all(len(c) == 3 for c in h.vertices + h.edges)
    # a hexagonal face alternates vertex and edge nodes, so its face cycle has 3 darts
    assert all(len(f) == 3 for f in h.faces)


def test_honeycomb_four_by_four_code():
    h = gen_honeycomb_hypermap(4, 4)
    code = CssCode(*hypermap_check_matrices(h, honeycomb_special_basis(h, 4, 4)))
    assert (code.n, code.k) == (32, 2)
    assert code.min_distance().d == min_distance_oracle(code)


@pytest.mark.parametrize("p, q", [(1, 2), (2, 1), (3, 4)])
def test_honeycomb_rejects_bad_sizes(p, q):
    with pytest.raises(ValueError):
        gen_honeycomb_hypermap(p, q)


# ---------------------------------------------------------------------------
# fixtures


def test_fixture_kinds():
    steane = fixture("steane")
    assert isinstance(steane, CssCode) and steane.parameters() == (7, 1, 3)
    torus = fixture("torus8")
    assert isinstance(torus, Hypermap) and torus.genus == 1
    octagon = fixture("octagon-square")
    code = CssCode(*hypermap_check_matrices(octagon, default_special_basis(octagon)))
    assert code.parameters() == (16, 2, 2)


def test_dlcube_fixture():
    h = fixture("dlcube")
    assert h.counts() == (8, 4, 12) and h.genus == 1
    assert default_special_basis(h).special == (6, 12, 18, 24)
    assert CssCode(*hypermap_check_matrices(h)).parameters() == (20, 2, 3)


def test_unknown_fixture_lists_choices():
    with pytest.raises(ValueError, match="octagon-square"):
        fixture("klein-bottle")


def test_fixture_checksum_is_enforced(tmp_path):
    for entry in families.fixture_dir().iterdir():
        (tmp_path / entry.name).write_bytes(entry.read_bytes())
    assert "darts 8" in families.fixture_text("torus8", tmp_path)
    text = (tmp_path / "torus8.hmap").read_text(encoding="utf-8")
    (tmp_path / "torus8.hmap").write_text(text.replace("(1 8 3 6)", "(1 8 6 3)"), encoding="utf-8")
    with pytest.raises(families.FixtureIntegrityError):
        families.fixture_text("torus8", tmp_path)
