"""Chern invariants, Hirzebruch-type inequalities and ball-quotient analysis
for Kummer covers branched along plane curve configurations."""

from .ball_quotient import (
    AdmissiblePair,
    BallQuotientVerdict,
    CandidateFamily,
    CandidateStatus,
    CurveCensus,
    FermatComponentData,
    admissible_pairs,
    ball_quotient_verdict,
    candidate_counts,
    curve_census,
    fermat_component_data,
    fermat_genus,
    forced_counts,
    per_curve_sum,
    prop_branch_curve,
    prop_exceptional,
    search_candidates,
)
from .catalog import CATALOG_KEYS, catalog_lookup
from .chern import (
    GAMMA_BOUND,
    QuadraticInvariant,
    bmy_scan,
    c1sq_poly,
    c2_poly,
    chern_numbers_at,
    chern_slope,
    format_decimal,
    gamma,
    hirzebruch_poly,
)
from .config import (
    ConfigCombinatorics,
    FVector,
    ValidationReport,
    f_vector,
    parse_config,
    serialize,
    validate,
)
from .errors import (
    CatalogError,
    DomainError,
    GammaUndefinedError,
    InvalidConfigurationError,
    KummerError,
    ParseError,
    ZeroDenominatorError,
)
from .inequalities import (
    InequalityReport,
    check_gamma_consequence,
    check_hirzebruch_n2,
    check_hirzebruch_n3,
    check_shnurnikov,
    run_all,
)

__version__ = "0.1.0"
