"""Multicanonical thresholds of quasi-elliptic surfaces, computed over numerical invariants."""

from qellip.canonical import (
    CanonicalClass,
    PlurigenusBounds,
    base_degree,
    canonical_data,
    gives_fibration,
    plurigenus_bounds,
)
from qellip.enumerator import (
    CaseLabel,
    CertificationReport,
    RegionBounds,
    certify_bound,
    classify_case,
    enumerate_configs,
    tail_checks,
)
from qellip.examples import (
    PlurigenusRecord,
    example_surface_3_1,
    plurigenus_table,
    question_3_3_config,
)
from qellip.invariants import (
    FiberDatum,
    FiberKind,
    InvalidConfigError,
    SurfaceConfig,
    ValidationReport,
    kodaira_dim_is_one,
    kodaira_value,
    min_chi,
    validate,
)
from qellip.threshold import (
    NotKodairaOneError,
    ThresholdCertificate,
    first_success,
    stable_threshold,
    step_increment,
)

__all__ = [
    "CanonicalClass",
    "CaseLabel",
    "CertificationReport",
    "FiberDatum",
    "FiberKind",
    "InvalidConfigError",
    "NotKodairaOneError",
    "PlurigenusBounds",
    "PlurigenusRecord",
    "RegionBounds",
    "SurfaceConfig",
    "ThresholdCertificate",
    "ValidationReport",
    "base_degree",
    "canonical_data",
    "certify_bound",
    "classify_case",
    "enumerate_configs",
    "example_surface_3_1",
    "first_success",
    "gives_fibration",
    "kodaira_dim_is_one",
    "kodaira_value",
    "min_chi",
    "plurigenus_bounds",
    "plurigenus_table",
    "question_3_3_config",
    "stable_threshold",
    "step_increment",
    "tail_checks",
    "validate",
]
