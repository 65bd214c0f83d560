"""Cardinality estimation for sampled streams.

A HyperLogLog sketch over the observed sample combined with a Good-Turing
estimate of the unseen element share. The heavy lifting lives in the C++
extension module; this package re-exports its public surface.
"""

from sampcard._core import (
    AllTrialsDegenerateError,
    BernoulliSampler,
    BudgetSplit,
    DegenerateSampleError,
    EmptySampleError,
    EstimateReport,
    FrequencyModel,
    HllSketch,
    HYPERLOGLOG_ARE,
    InfeasibleBudgetError,
    ReservoirSubsample,
    SampleSummary,
    TrialResult,
    estimate_tokens,
    estimate_values,
    expected_p0,
    expected_p1,
    hash_bytes,
    hash_u64,
    optimal_split,
    rel_variance_exact,
    rel_variance_subsampled,
    run_trials,
)

__all__ = [
    "AllTrialsDegenerateError",
    "BernoulliSampler",
    "BudgetSplit",
    "DegenerateSampleError",
    "EmptySampleError",
    "EstimateReport",
    "FrequencyModel",
    "HllSketch",
    "HYPERLOGLOG_ARE",
    "InfeasibleBudgetError",
    "ReservoirSubsample",
    "SampleSummary",
    "TrialResult",
    "estimate_tokens",
    "estimate_values",
    "expected_p0",
    "expected_p1",
    "hash_bytes",
    "hash_u64",
    "optimal_split",
    "rel_variance_exact",
    "rel_variance_subsampled",
    "run_trials",
]

__version__ = "0.1.0"
