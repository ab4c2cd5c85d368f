"""Exact lozenge-tiling counts and gap-boundary correlations.

The region is the left half of a hexagon with a free vertical boundary;
a small gap (a side-2 triangle or a single horizontal lozenge) may be
punched at lattice distance k from that boundary.  Counting runs through
three independent routes (closed product-sum formulas, a Pfaffian of an
explicit skew matrix, and brute-force matching or path enumeration) and
the analysis layer evaluates the gap-boundary correlation and its
asymptotic laws by quadrature.
"""

from .analysis import (
    CorrelationValue,
    QuadratureSpec,
    decay_ratio_check,
    distance_law_check,
    f5_4_partial,
    integral_I,
    integral_difference,
    omega_asymptotic,
    omega_f,
)
from .counting import (
    GapMatrix,
    build_matrix,
    count_free_pfaffian,
    count_gap_closed,
    count_gap_pfaffian,
    count_lozenge_closed,
    finite_ratio,
    macmahon,
)
from .errors import (
    DegenerateRegion,
    FreehexError,
    HoleOutOfRegion,
    NoConvergence,
    NonIntegerResult,
    OddSize,
    PoleInRange,
    SingularParameter,
    SizeTooLarge,
    TooLarge,
)
from .exactnum import Rational, binomial, factorial, interpolate_value, pochhammer, signed_sum
from .oracle import count_matchings, count_nilp
from .pfaffian import (
    determinant,
    mehta_wang_lhs,
    mehta_wang_rhs,
    pf_by_definition,
    pfaffian,
    pfaffian_product_identity,
    pfaffian_reciprocal_identity,
)
from .region import (
    HorizontalLozenge,
    RegionGraph,
    RegionSpec,
    Triangle2,
    TriangleCell,
    build_region,
    nilp_endpoints,
)

__version__ = "0.1.0"

__all__ = [
    "CorrelationValue",
    "DegenerateRegion",
    "FreehexError",
    "GapMatrix",
    "HoleOutOfRegion",
    "HorizontalLozenge",
    "NoConvergence",
    "NonIntegerResult",
    "OddSize",
    "PoleInRange",
    "QuadratureSpec",
    "Rational",
    "RegionGraph",
    "RegionSpec",
    "SingularParameter",
    "SizeTooLarge",
    "TooLarge",
    "Triangle2",
    "TriangleCell",
    "binomial",
    "build_matrix",
    "build_region",
    "count_free_pfaffian",
    "count_gap_closed",
    "count_gap_pfaffian",
    "count_lozenge_closed",
    "count_matchings",
    "count_nilp",
    "decay_ratio_check",
    "determinant",
    "distance_law_check",
    "f5_4_partial",
    "factorial",
    "finite_ratio",
    "integral_I",
    "integral_difference",
    "interpolate_value",
    "macmahon",
    "mehta_wang_lhs",
    "mehta_wang_rhs",
    "nilp_endpoints",
    "omega_asymptotic",
    "omega_f",
    "pf_by_definition",
    "pfaffian",
    "pfaffian_product_identity",
    "pfaffian_reciprocal_identity",
    "pochhammer",
    "signed_sum",
    "__version__",
]
