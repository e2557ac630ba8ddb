"""Exact-arithmetic stability computations on degree-2d K3 surfaces of
Picard rank one: lattice pairing, central charges and phases, walls, and
machine-checkable stability certificates."""

from .lattice import (
    MukaiVector,
    Ordering,
    SurfaceContext,
    VectorClass,
    classify,
    euler_chi,
    gieseker_compare,
    iterated_twist,
    line_bundle_vector,
    mu_stable_gcd,
    mukai_pairing,
    reduced_hilbert,
    self_square,
    skyscraper_vector,
    slope,
    spherical_twist,
)
from .charges import (
    Bucket,
    CentralCharge,
    HeartSide,
    PhaseKey,
    StabilityPoint,
    central_charge,
    charge_cross,
    gl2_apply,
    heart_side,
    in_stability_region,
    in_stability_region_gt2,
    is_good,
    phase_key,
    shift_phase,
)
from .walls import (
    Certificate,
    Check,
    DestabilizingRegion,
    Verdict,
    Wall,
    WallKind,
    Window,
    certify_semirigid_order,
    certify_spherical_order,
    cross_coefficients,
    destabilizing_region,
    find_destabilizing_twist,
    wall_between,
)
from .certify import (
    CertVerdict,
    ChiPositivity,
    HNFactor,
    HNResult,
    HNStatus,
    Scope,
    ScopeKind,
    SheafHypothesis,
    StabilityCertificate,
    certify_semirigid,
    certify_semirigid_everywhere,
    certify_spherical,
    chi_positivity,
    fm_partners,
    in_gt2_torsion_side,
    twisted_skyscraper_hn,
)

__all__ = [
    "Bucket",
    "CentralCharge",
    "CertVerdict",
    "Certificate",
    "Check",
    "ChiPositivity",
    "DestabilizingRegion",
    "HNFactor",
    "HNResult",
    "HNStatus",
    "HeartSide",
    "MukaiVector",
    "Ordering",
    "PhaseKey",
    "Scope",
    "ScopeKind",
    "SheafHypothesis",
    "StabilityCertificate",
    "StabilityPoint",
    "SurfaceContext",
    "VectorClass",
    "Verdict",
    "Wall",
    "WallKind",
    "Window",
    "central_charge",
    "certify_semirigid",
    "certify_semirigid_everywhere",
    "certify_semirigid_order",
    "certify_spherical",
    "certify_spherical_order",
    "charge_cross",
    "chi_positivity",
    "classify",
    "cross_coefficients",
    "destabilizing_region",
    "euler_chi",
    "find_destabilizing_twist",
    "fm_partners",
    "gieseker_compare",
    "gl2_apply",
    "heart_side",
    "in_gt2_torsion_side",
    "in_stability_region",
    "in_stability_region_gt2",
    "is_good",
    "iterated_twist",
    "line_bundle_vector",
    "mu_stable_gcd",
    "mukai_pairing",
    "phase_key",
    "reduced_hilbert",
    "self_square",
    "shift_phase",
    "skyscraper_vector",
    "slope",
    "spherical_twist",
    "twisted_skyscraper_hn",
    "wall_between",
]

__version__ = "0.1.0"
