"""Exact, exhaustive No-Free-Lunch laboratory.

Enumerates search spaces, function sets and deterministic black-box policies
small enough to check the NFL family of theorems by brute force, with exact
rational arithmetic throughout.
"""

from .algorithms import AlgorithmKind, Lcg64, RngKind, SeededAlgorithm, SeedFamily, run_algorithm, seed_average
from .core import (
    Encoding,
    Measure,
    MeasureKind,
    Orientation,
    PolicyTree,
    SearchSpace,
    TraceRecord,
    ValueTable,
    apply_measure,
    run_policy,
)
from .enumeration import (
    CupCheck,
    FunctionSet,
    cup_class,
    cup_signature,
    enumerate_functions,
    enumerate_policies,
    is_cup,
    partition_cup,
    policy_count,
)
from .errors import NFLError
from .verifier import (
    ProblemDistribution,
    VerificationReport,
    average_performance,
    demonstrate_gap,
    focus_pair,
    trace_multiset_equal,
    verify_nfl,
    verify_nunfl,
    verify_snfl,
)

__all__ = [
    "AlgorithmKind", "CupCheck", "Encoding", "FunctionSet", "Lcg64", "Measure", "MeasureKind", "NFLError",
    "Orientation", "PolicyTree", "ProblemDistribution", "RngKind", "SearchSpace", "SeedFamily",
    "SeededAlgorithm", "TraceRecord", "ValueTable", "VerificationReport", "apply_measure",
    "average_performance", "cup_class", "cup_signature", "demonstrate_gap", "enumerate_functions",
    "enumerate_policies", "focus_pair", "is_cup", "partition_cup", "policy_count", "run_algorithm",
    "run_policy", "seed_average", "trace_multiset_equal", "verify_nfl", "verify_nunfl", "verify_snfl",
]
