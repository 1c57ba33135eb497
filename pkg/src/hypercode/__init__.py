"""CSS quantum codes from hypermaps and embedded graphs."""

from hypercode.css import (
    CssCode,
    DistanceResult,
    InconclusiveSearchError,
    NoLogicalQubitsError,
    OrthogonalityError,
    distance_witness,
    make_css,
    min_distance,
    min_distance_oracle,
)
from hypercode.f2 import BinaryMatrix, BinaryVector
from hypercode.families import (
    HoleSpec,
    fixture,
    gen_grid_hypermap,
    gen_honeycomb_hypermap,
    gen_planar,
    gen_toric,
)
from hypercode.homology import (
    SpecialBasis,
    default_special_basis,
    homology_dimensions,
    hypermap_check_matrices,
    lift_weight,
    map_check_matrices,
    special_basis,
)
from hypercode.hypermap import Hypermap, NotTransitiveError, make_hypermap
from hypercode.permutations import Permutation, compose, inverse

__all__ = [
    "BinaryMatrix",
    "BinaryVector",
    "CssCode",
    "DistanceResult",
    "HoleSpec",
    "Hypermap",
    "InconclusiveSearchError",
    "NoLogicalQubitsError",
    "NotTransitiveError",
    "OrthogonalityError",
    "Permutation",
    "SpecialBasis",
    "compose",
    "default_special_basis",
    "distance_witness",
    "fixture",
    "gen_grid_hypermap",
    "gen_honeycomb_hypermap",
    "gen_planar",
    "gen_toric",
    "homology_dimensions",
    "hypermap_check_matrices",
    "inverse",
    "lift_weight",
    "make_css",
    "make_hypermap",
    "map_check_matrices",
    "min_distance",
    "min_distance_oracle",
    "special_basis",
]
