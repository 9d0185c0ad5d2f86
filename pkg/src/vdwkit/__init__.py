"""Exact arithmetic and exhaustive search around van der Waerden numbers.

The package splits into five layers: known values with provenance
(registry), integer radix machinery (radix), bound verification and the
two summary tables (bounds), exact rational ratio analysis (ratio), and
certificate-producing exhaustive search (search).  The vdw command line
tool fronts all of them.
"""
from .bounds import (
    LogBoundResult,
    TheoremReport,
    check_theorem,
    table1,
    table2,
    verify_log_bound,
)
from .radix import (
    Interval,
    RadixRep,
    containing_interval,
    dual_interval_intersection,
    floor_log,
    from_radix,
    log_display,
    to_radix,
)
from .ratio import (
    AlphaDecomposition,
    RatioAnalysis,
    alpha_decompose,
    analyze,
    binomial_expansion_estimate,
    exact_identity_rhs,
    exact_ratio,
    gap_survey,
)
from .registry import (
    KNOWN_VALUES,
    Registry,
    RegistryConflictError,
    VdwRecord,
    default_registry,
)
from .search import (
    Certificate,
    CertificateParseError,
    Coloring,
    SearchBudget,
    SearchOutcome,
    SearchStats,
    ap_free,
    compute_vdw,
    find_monochromatic_ap,
    last_position_check,
    read_certificate,
    verify_certificate,
    write_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaDecomposition",
    "Certificate",
    "CertificateParseError",
    "Coloring",
    "Interval",
    "KNOWN_VALUES",
    "LogBoundResult",
    "RadixRep",
    "RatioAnalysis",
    "Registry",
    "RegistryConflictError",
    "SearchBudget",
    "SearchOutcome",
    "SearchStats",
    "TheoremReport",
    "VdwRecord",
    "alpha_decompose",
    "analyze",
    "ap_free",
    "binomial_expansion_estimate",
    "check_theorem",
    "compute_vdw",
    "containing_interval",
    "default_registry",
    "dual_interval_intersection",
    "exact_identity_rhs",
    "exact_ratio",
    "find_monochromatic_ap",
    "floor_log",
    "from_radix",
    "gap_survey",
    "last_position_check",
    "log_display",
    "read_certificate",
    "table1",
    "table2",
    "to_radix",
    "verify_certificate",
    "verify_log_bound",
    "write_certificate",
]
