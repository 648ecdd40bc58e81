"""Signature-based Groebner engine for determinantal and critical-point
ideals, with Hilbert-series row-count and complexity estimators."""

from .algebra import (
    ModuleElement,
    Poly,
    PolyMatrix,
    PolyParseError,
    enumerate_monomials,
    format_poly,
    grevlex_cmp,
    grevlex_key,
    homogenize,
    parse_poly,
    partial_derivative,
    pot_cmp,
    pot_key,
    random_homogeneous,
    random_poly_matrix,
)
from .determinantal import (
    CritSystem,
    crit_gb,
    en_leading_terms,
    en_syzygy_generators,
    jacobian,
    max_minors_sig_gb,
    minors,
    syzygy_direct_sum_check,
)
from .field import DEFAULT_PRIME, PrimeField
from .hilbert import (
    EstimatorParams,
    complexity_estimate,
    degree_bound_crit,
    degree_bound_minors,
    hf_crit,
    hf_minors_ideal,
    hf_semiregular,
    lazard_bound,
    rows_crit,
    rows_minors,
    speedup_table,
    syzygy_count,
)
from .instances import (
    Instance,
    InstanceFormatError,
    InstanceSpec,
    random_crit_instance,
    random_minors_instance,
    read_instance,
    write_instance,
)
from .macaulay import MacaulayMatrix, RowStats, Signature, build_macaulay, full_macaulay
from .sig_gb import GBResult, SyzygySignatureSet, is_groebner_up_to, lazard_gb, sig_gb
from .verify import VerifyReport, verify_instance

__all__ = [
    "DEFAULT_PRIME",
    "PrimeField",
    "Poly",
    "ModuleElement",
    "PolyMatrix",
    "PolyParseError",
    "grevlex_key",
    "grevlex_cmp",
    "pot_key",
    "pot_cmp",
    "enumerate_monomials",
    "parse_poly",
    "format_poly",
    "partial_derivative",
    "random_homogeneous",
    "random_poly_matrix",
    "homogenize",
    "Signature",
    "RowStats",
    "MacaulayMatrix",
    "build_macaulay",
    "full_macaulay",
    "SyzygySignatureSet",
    "GBResult",
    "sig_gb",
    "lazard_gb",
    "is_groebner_up_to",
    "minors",
    "jacobian",
    "CritSystem",
    "crit_gb",
    "max_minors_sig_gb",
    "en_syzygy_generators",
    "en_leading_terms",
    "syzygy_direct_sum_check",
    "hf_semiregular",
    "hf_minors_ideal",
    "hf_crit",
    "syzygy_count",
    "rows_minors",
    "rows_crit",
    "degree_bound_minors",
    "degree_bound_crit",
    "lazard_bound",
    "EstimatorParams",
    "complexity_estimate",
    "speedup_table",
    "InstanceSpec",
    "Instance",
    "InstanceFormatError",
    "random_minors_instance",
    "random_crit_instance",
    "write_instance",
    "read_instance",
    "verify_instance",
    "VerifyReport",
    "__version__",
]

__version__ = "0.1.0"
