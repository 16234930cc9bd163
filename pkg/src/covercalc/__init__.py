"""Exact invariants of abelian covers of the plane branched over line
arrangements: K^2, Euler characteristic, holomorphic characteristic,
geometric genus, irregularity, torsion bounds, and branch-curve tables,
all in integer arithmetic.
"""

from .cover import (
    CoverSpec,
    GroupElement,
    PointClassification,
    PointStatus,
    classify_points,
    epsilon,
    pair_independent,
    validate_cover_spec,
)
from .errors import (
    BadPointError,
    ChartFailure,
    CovercalcError,
    IdenticalLines,
    NegativeIrregularity,
    NoetherViolation,
    NotBig,
    ParseError,
    UnknownPreset,
    UnsupportedGroup,
    ValidationError,
)
from .genus import (
    CyclicCoverSpec,
    GenusReport,
    VanishingSpec,
    abelian_pg,
    cyclic_pg,
    irregularity,
    poly_space_dim,
    quotient_multiplicities,
)
from .geometry import (
    Arrangement,
    IncidenceData,
    ProjLine,
    ProjPoint,
    compute_incidence,
    intersect,
)
from .invariants import (
    BlowupLattice,
    CanonicalData,
    CurveRecord,
    NumericalInvariants,
    branch_curve_report,
    build_lattice,
    canonical_divisor_class,
    chi_holomorphic,
    euler_characteristic,
    k_squared,
    minimality_report,
    numerical_invariants,
)
from .presets import PRESET_NAMES, preset
from .torsion import (
    DivisorCandidate,
    DivisorEnumeration,
    EquiSystem,
    TorsionBound,
    build_equi_system,
    enumerate_even_pullback_divisors,
    k_phi,
    torsion_lower_bound,
    universal_cover_spec,
)

__version__ = "0.1.0"
