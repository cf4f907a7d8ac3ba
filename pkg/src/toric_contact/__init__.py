"""Invariants of toric contact structures on S3-bundles over S2.

Everything is exact: integers and :class:`fractions.Fraction`.
"""

from .equivalence import (
    EquivalenceVerdict,
    Outcome,
    Policy,
    Rule,
    bouquet_size,
    decide_equivalence,
    exceptional_sphere_test,
    tori_conjugacy_lower_bound,
)
from .errors import ConsistencyError, DomainError, UnsupportedShapeError
from .hirzebruch import (
    Basis,
    DivisorClass,
    LevelData,
    OrbifoldSurface,
    Parity,
    SubfamilyParams,
    admissible_set,
    canonical_divisor,
    intersection_number,
    level_decomposition,
    level_of,
    orbifold_chern_evaluation,
    quotient_orbifold,
    symplectic_class,
    top_level_cardinality,
)
from .homology import (
    CriticalType,
    Generator,
    Spectrum,
    Stratum,
    action_of_branch_orbit,
    count_low_degree,
    enumerate_spectrum,
    grade_generator,
    novikov_shift,
    regular_case_gradings,
    rs_index_branch,
    rs_index_dense,
)
from .numeric import ceil_div, euler_phi, gcd_all
from .polytope import (
    KarshonGraph,
    LabeledTrapezoid,
    build_trapezoid,
    karshon_graph_of,
    strip_labels,
)
from .structures import (
    ManifoldType,
    Quadruple,
    SasakiConeVector,
    YpqParams,
    first_chern_coefficient,
    is_admissible,
    manifold_type,
    quadruple_to_ypq,
    sasaki_cone_contains,
    ypq_to_quadruple,
)

__version__ = "0.1.0"
