"""Exact classification of hyperbolic triangle groups by arithmetic dimension."""

from .core import (
    INFINITY,
    InfinityType,
    Order,
    PrimeTable,
    PRIMES,
    Sign,
    Triple,
    chi_sign,
    euler_phi,
    fold,
    is_hyperbolic,
    lcm_finite,
    min_hyperbolic_c,
    ndp,
    ord2,
    parse_order,
)
from .curvature import CurvatureSign, abkab_check, c_bound_for_prime, curvature_sign
from .dimension import AdimResult, adim, is_r_arithmetic
from .enumeration import (
    Bounds,
    EnumerationConfig,
    bounds_for_r,
    enumerate_triples,
    map_bounds_to_primes,
    safe_threshold,
    search_cs,
    summarize,
)
from .errors import InvariantViolation
from .golden import GoldenSet, load_counts, load_golden
from .multiplicity import (
    MultiplicityReport,
    multiplicity,
    multiplicity_brute,
    multiplicity_closed,
)
from .oracle import brute_enumerate, interval_sign_batch, kappa_float
from .records import TripleRecord

__version__ = "0.1.0"

__all__ = [
    "AdimResult",
    "Bounds",
    "CurvatureSign",
    "EnumerationConfig",
    "GoldenSet",
    "INFINITY",
    "InfinityType",
    "InvariantViolation",
    "MultiplicityReport",
    "Order",
    "PRIMES",
    "PrimeTable",
    "Sign",
    "Triple",
    "TripleRecord",
    "abkab_check",
    "adim",
    "bounds_for_r",
    "brute_enumerate",
    "c_bound_for_prime",
    "chi_sign",
    "curvature_sign",
    "enumerate_triples",
    "euler_phi",
    "fold",
    "interval_sign_batch",
    "is_hyperbolic",
    "is_r_arithmetic",
    "kappa_float",
    "lcm_finite",
    "load_counts",
    "load_golden",
    "map_bounds_to_primes",
    "min_hyperbolic_c",
    "multiplicity",
    "multiplicity_brute",
    "multiplicity_closed",
    "ndp",
    "ord2",
    "parse_order",
    "safe_threshold",
    "search_cs",
    "summarize",
]
