"""Exact arithmetic for ordinals below epsilon-0 and finitely-piecewise
homeomorphisms of ordinal segments, plus the group-dynamical and
matching-based constructions built on them."""

from .errors import (
    ContractError,
    DomainError,
    OrdhomeoError,
    ParseError,
    ResourceError,
    ValidationError,
)
from .ordinals import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    PointClass,
    absorb_threshold,
    cb_rank_segment,
    classify,
    compare,
    diff_exponent,
    enumerate_level,
    format_ordinal,
    in_derived,
    isolating_left_endpoint,
    left_subtract,
    omega_pow,
    parse_ordinal,
    rank,
)
from .homeo import (
    ClopenInterval,
    OrdinalSet,
    Piece,
    PwHomeo,
    apply,
    build,
    canonicalize,
    common_fixed_points,
    compose,
    enum_index,
    find_fixed_point_above,
    fixed_points,
    format_homeo,
    format_interval,
    format_ordinal_set,
    identity,
    index_of,
    initial,
    interval_swap,
    invariant_point,
    invariant_prefix,
    inverse,
    order_of,
    order_type_label,
    parse_homeo,
    restrict_to_initial,
    span,
    sup_image,
    swap_points,
)
from .dynamics import (
    RoelckeCertificate,
    TransitivityProblem,
    baire_density_witness,
    dense_approx,
    discontinuity_sequence,
    fresh_point,
    in_baire_T,
    make_transitive,
    roelcke_decompose,
)
from .sieve import (
    ConstraintSystem,
    FinitePermutation,
    PartialInjection,
    below,
    chain_limit,
    contains,
    extend_to_permutation,
    format_constraints,
    format_injection,
    format_permutation,
    hall_brute,
    normalize,
    parse_constraints,
    parse_injection,
    satisfiable,
)

__version__ = "0.1.0"
