"""f-divergences between finite discrete measures, with certified TV bounds.

    >>> from divbound import ProbabilityMeasure, kl, invert, builtin
    >>> mu = ProbabilityMeasure(("a", "b"), [0.5, 0.5])
    >>> nu = ProbabilityMeasure(("a", "b"), [0.25, 0.75])
    >>> round(kl(mu, nu).value, 6)
    0.143841
    >>> invert(builtin("KL"), 0.02).tv_upper_bound  # doctest: +SKIP
    0.2828...
"""

from .bounds import (
    BoundFunction,
    TvCertificate,
    bretagnolle_huber,
    bretagnolle_huber_certificate,
    check_monotone,
    hellinger_bound,
    hellinger_certificate,
    invert,
    lower_bound,
    phi,
)
from .divergence import (
    DivergenceValue,
    d_f,
    density_ratio,
    hellinger,
    kl,
    pearson,
    sh,
    tv,
)
from .errors import (
    AbsoluteContinuityViolation,
    DivboundError,
    DomainError,
    InvalidMeasure,
    MeasureFormatError,
    NonMonotoneGenerator,
    UnknownGenerator,
)
from .extreal import INF, format_extended, is_finite, parse_extended
from .generator import (
    BUILTIN_NAMES,
    Generator,
    builtin,
    check_separation,
    default_grid,
    dual,
    is_builtin,
)
from .jointrange import (
    ScanRecord,
    VerificationReport,
    random_pair,
    scan_binary,
    scan_to_csv,
    tightness_gap,
    verify_bound,
)
from .measure import (
    HahnDecomposition,
    ProbabilityMeasure,
    SignedMeasure,
    align,
    hahn_jordan,
    read_probability_measure,
    read_signed_measure,
    subset_extrema,
    subset_totals,
    total_variation_norm,
    tv_distance,
    tv_via_density,
)

__version__ = "0.1.0"

__all__ = [
    "AbsoluteContinuityViolation",
    "BUILTIN_NAMES",
    "BoundFunction",
    "DivboundError",
    "DivergenceValue",
    "DomainError",
    "Generator",
    "HahnDecomposition",
    "INF",
    "InvalidMeasure",
    "MeasureFormatError",
    "NonMonotoneGenerator",
    "ProbabilityMeasure",
    "ScanRecord",
    "SignedMeasure",
    "TvCertificate",
    "UnknownGenerator",
    "VerificationReport",
    "align",
    "bretagnolle_huber",
    "bretagnolle_huber_certificate",
    "builtin",
    "check_monotone",
    "check_separation",
    "d_f",
    "default_grid",
    "density_ratio",
    "dual",
    "format_extended",
    "hahn_jordan",
    "hellinger",
    "hellinger_bound",
    "hellinger_certificate",
    "invert",
    "is_builtin",
    "is_finite",
    "kl",
    "lower_bound",
    "parse_extended",
    "pearson",
    "phi",
    "random_pair",
    "read_probability_measure",
    "read_signed_measure",
    "scan_binary",
    "scan_to_csv",
    "sh",
    "subset_extrema",
    "subset_totals",
    "tightness_gap",
    "total_variation_norm",
    "tv",
    "tv_distance",
    "tv_via_density",
    "verify_bound",
]
