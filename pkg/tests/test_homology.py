from __future__ import annotations

import random

import pytest
from conftest import (
    OCTAGON_HX,
    OCTAGON_HZ,
    all_cycles,
    brute_lift_weight,
    hypermaps,
    octagon_square,
    random_hypermap,
    torus8,
)
from hypothesis import given, settings

from hypercode.css import CssCode
from hypercode.f2 import BinaryMatrix, BinaryVector, in_row_space
from hypercode.families import gen_grid_hypermap, gen_honeycomb_hypermap, gen_toric, grid_special_basis
from hypercode.homology import (
    ChainComplexError,
    ChainComplexF2,
    InvalidEmbeddingError,
    NotACycleError,
    bipartite_boundaries,
    dart_sum,
    darts_of,
    default_special_basis,
    dual_cycle_weight,
    from_quotient,
    homology_dimensions,
    hypermap_check_matrices,
    is_classical_cycle,
    lift,
    lift_weight,
    map_check_matrices,
    mu,
    raw_boundaries,
    special_basis,
    to_quotient,
)


# ---------------------------------------------------------------------------
# printed example


def test_octagon_square_matrices_match_print(octagon):
    hx, hz = hypermap_check_matrices(octagon)
    assert str(hx).splitlines() == OCTAGON_HX
    assert str(hz).splitlines() == OCTAGON_HZ


def test_default_special_darts_are_edge_maxima(octagon):
    basis = default_special_basis(octagon)
    assert basis.special == (3, 6, 9, 12, 15, 18, 21, 24)
    assert basis.basis_order[:4] == (1, 2, 4, 5)


def test_boundary_of_dart_ten(octagon):
    d1, _, _ = raw_boundaries(octagon)
    column = [i for i in range(d1.rows) if d1[i, 9]]
    assert column == [5, 6]


def test_first_face_in_quotient_basis(octagon):
    basis = default_special_basis(octagon)
    face = dart_sum(24, octagon.faces[0])
    assert darts_of(from_quotient(basis, to_quotient(basis, face))) == [1, 4, 5, 11, 19, 20]


def test_octagon_homology(octagon):
    assert homology_dimensions(octagon) == (1, 2, 1)


def test_torus8_code_has_six_columns():
    hx, hz = hypermap_check_matrices(torus8())
    assert hx.cols == hz.cols == 6
    assert CssCode(hx, hz).k == 2


# ---------------------------------------------------------------------------
# special bases


def test_special_basis_rejects_two_darts_on_one_edge(octagon):
    with pytest.raises(ValueError, match="two special darts"):
        special_basis(octagon, [1, 2, 6, 9, 12, 15, 18, 21])


def test_special_basis_rejects_missing_edge(octagon):
    with pytest.raises(ValueError, match="no special dart"):
        special_basis(octagon, [3, 6, 9, 12, 15, 18, 21])


def test_explicit_basis_changes_columns_not_dimensions(octagon):
    basis = special_basis(octagon, [1, 4, 7, 10, 13, 16, 19, 22])
    hx, hz = hypermap_check_matrices(octagon, basis)
    assert basis.basis_order[:3] == (2, 3, 5)
    assert CssCode(hx, hz).k == 2
    assert max(hz.column_weights()) <= 2


# ---------------------------------------------------------------------------
# chain complexes and embedded graphs


def test_chain_complex_rejects_nonzero_composite():
    d1 = BinaryMatrix.from_strings(["11"])
    d2 = BinaryMatrix.from_strings(["1", "0"])
    with pytest.raises(ChainComplexError):
        ChainComplexF2(d2, d1)


def test_chain_complex_of_a_circle():
    d1 = BinaryMatrix.from_strings(["101", "110", "011"])
    complex_ = ChainComplexF2(BinaryMatrix(3, 0), d1)
    assert complex_.homology_dims() == (1, 1, 0)


def test_map_check_matrices_rejects_out_of_range_edge():
    with pytest.raises(InvalidEmbeddingError, match="edge 5"):
        map_check_matrices([[0, 4]], [[0]], n_edges=3)


def test_map_check_matrices_rejects_three_faces_on_an_edge():
    with pytest.raises(InvalidEmbeddingError, match="3 face rows"):
        map_check_matrices([[0, 1]], [[0, 1], [0, 1], [0, 1]], n_edges=2)


def test_map_check_matrices_rejects_odd_overlap():
    with pytest.raises(InvalidEmbeddingError, match="odd number"):
        map_check_matrices([[0, 1], [1, 2]], [[0, 2]], n_edges=3)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_torus_grid_columns_have_two_endpoints(m):
    code = gen_toric(m)
    assert set(code.hx.column_weights()) == {2}


# ---------------------------------------------------------------------------
# properties over random hypermaps


@settings(max_examples=150, deadline=None)
@given(hypermaps(max_n=12))
def test_homology_is_one_two_g_one(h):
    assert homology_dimensions(h) == (1, 2 * h.genus, 1)


@settings(max_examples=150, deadline=None)
@given(hypermaps(max_n=12))
def test_hz_columns_have_weight_at_most_two(h):
    _, hz = hypermap_check_matrices(h)
    assert max(hz.column_weights(), default=0) <= 2


@settings(max_examples=100, deadline=None)
@given(hypermaps(max_n=12))
def test_raw_boundaries_compose_to_zero(h):
    d1, d2, iota = raw_boundaries(h)
    assert (d1 @ d2).is_zero() and (d1 @ iota).is_zero()
    dbar1, dbar2 = bipartite_boundaries(h)
    assert (dbar1 @ dbar2).is_zero()


@settings(max_examples=100, deadline=None)
@given(hypermaps(max_n=12))
def test_quotient_round_trip(h):
    basis = default_special_basis(h)
    rng = random.Random(h.n)
    x = BinaryVector.from_bits(rng.randint(0, 1) for _ in range(h.n))
    q = to_quotient(basis, x)
    back = from_quotient(basis, q)
    _, _, iota = raw_boundaries(h)
    assert in_row_space(iota.T, back ^ x)


# ---------------------------------------------------------------------------
# lift weights


@settings(max_examples=60, deadline=None)
@given(hypermaps(max_n=10))
def test_lift_weight_matches_enumeration(h):
    rng = random.Random(h.n * 31 + h.genus)
    for basis in (default_special_basis(h), special_basis(h, [rng.choice(e) for e in h.edges])):
        for x in all_cycles(h):
            w = lift(basis, x)
            assert mu(basis, to_quotient(basis, w)) == x
            assert not set(darts_of(w)) & set(basis.special)
            assert lift_weight(basis, x) == brute_lift_weight(basis, x)


def test_lift_rejects_non_cycles(octagon):
    basis = default_special_basis(octagon)
    with pytest.raises(NotACycleError):
        lift_weight(basis, dart_sum(24, [1]))


@pytest.mark.parametrize("m", [2, 4])
def test_grid_horizontal_cycle_lifts_to_weight_m(m):
    h = gen_grid_hypermap(m)
    x = dart_sum(h.n, [2 * c + 1 for c in range(m)])
    assert is_classical_cycle(h, x)
    assert lift_weight(grid_special_basis(h), x) == m


def test_dual_cycle_weight_ignores_special_darts(octagon):
    basis = default_special_basis(octagon)
    with_special = [y for y in all_cycles(octagon.dual()) if set(darts_of(y)) & set(basis.special)]
    assert with_special
    for y in with_special[:20]:
        plain = [d for d in darts_of(y) if d not in basis.special]
        assert dual_cycle_weight(basis, y) == len(plain) < y.weight()
    with pytest.raises(NotACycleError):
        dual_cycle_weight(basis, dart_sum(24, [1, 2, 3]))


def test_nonzero_dual_cycles_have_positive_weight(octagon):
    basis = default_special_basis(octagon)
    weights = [dual_cycle_weight(basis, y) for y in all_cycles(octagon.dual()) if y.any()]
    assert weights and min(weights) > 0


def _cross_check_cases():
    yield "torus8", torus8(), None
    yield "octagon-square", octagon_square(), None
    yield "grid-2", gen_grid_hypermap(2), grid_special_basis
    yield "honeycomb-2x2", gen_honeycomb_hypermap(2, 2), None
    rng = random.Random(5)
    for i in range(6):
        yield f"random-{i}", random_hypermap(rng, rng.randint(6, 12)), None


@pytest.mark.parametrize("name, h, rule", list(_cross_check_cases()), ids=lambda v: v if isinstance(v, str) else "")
def test_cycle_weights_give_code_distance(name, h, rule):
    basis = rule(h) if rule else default_special_basis(h)
    code = CssCode(*hypermap_check_matrices(h, basis))
    if code.k == 0:
        pytest.skip("sphere: no logical qubits")
    result = code.min_distance(threads=1)
    _, dbar2 = bipartite_boundaries(h)
    primal = [
        lift_weight(basis, x) for x in all_cycles(h) if x.any() and not in_row_space(dbar2.T, x)
    ]
    _, dual_dbar2 = bipartite_boundaries(h.dual())
    dual = [
        dual_cycle_weight(basis, y)
        for y in all_cycles(h.dual())
        if y.any() and not in_row_space(dual_dbar2.T, y)
    ]
    assert min(primal) == result.d_x
    assert min(dual) == result.d_z
