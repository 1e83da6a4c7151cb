"""Exact Tutte polynomials of matroids and matroid perspectives.

Subsets are integer bitmasks over an ordered ground set; bit ``i`` is the
``i``-th declared element.  Polynomials are exact, in ``x, u, y, v, z``.
"""

from .activity import ActivityProfile, active_sets, basis_activities, unique_witness_circuit
from .matroid import (
    Graph,
    GroundSet,
    Matroid,
    MatroidError,
    circuit_family,
    dual,
    free_matroid,
    fundamental,
    graphic_matroid,
    matroid_from_bases,
    matroid_from_circuits,
    minor,
    rank_stats,
    uniform_matroid,
)
from .perspective import (
    DawsonInterval,
    Perspective,
    PerspectiveError,
    colex_nearest,
    dawson_interval,
    dawson_map,
    dawson_partition,
    duality_involution,
    identity_perspective,
    interval_of,
    is_dawson_partition,
    major_to_perspective,
    perspective_dual,
    perspective_new,
    phi,
    phi_star,
)
from .poly import Polynomial, canonical_text, evaluate, partial_derivative, substitute
from .tutte import (
    FAMILIES,
    SYMBOLS,
    Symbol,
    derivative_gf,
    derivative_terms,
    diagonal_derivative_gf,
    expansion_family,
    five_var,
    specialize_symbol,
    tutte_corank_nullity,
    tutte_indspan,
)
from .verify import census, random_instance, run_checks

__version__ = "0.1.0"
