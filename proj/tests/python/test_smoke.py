"""Python-surface smoke tests for the sampcard extension module."""

import math

import pytest

import sampcard


def test_hash_determinism_and_vectors():
    assert sampcard.hash_bytes(b"", 0) == 0xEF46DB3751D8E999
    assert sampcard.hash_bytes(b"a", 0) == 0xD24EC4F1A98C6E5B
    assert sampcard.hash_bytes(b"a", 0) == sampcard.hash_bytes(b"a", 0)
    assert sampcard.hash_bytes(b"a", 0) != sampcard.hash_bytes(b"a", 1)
    assert sampcard.hash_u64(0, 0) == 0x34C96ACDCADB1BBB


def test_hll_estimate_within_ten_percent():
    sketch = sampcard.HllSketch(1024)
    for i in range(10000):
        sketch.insert(sampcard.hash_u64(i, 7))
    assert abs(sketch.estimate() - 10000) < 1000
    with pytest.raises(ValueError):
        sampcard.HllSketch(100)


def test_sample_summary_good_turing():
    summary = sampcard.SampleSummary()
    for token in [1, 2, 1, 3]:
        summary.offer(token)
    assert summary.length == 4
    assert summary.singletons == 2
    assert summary.p0_hat() == pytest.approx(0.5)

    empty = sampcard.SampleSummary()
    with pytest.raises(sampcard.EmptySampleError):
        empty.p0_hat()


def test_estimate_tokens_end_to_end():
    report = sampcard.estimate_tokens(["a", "b", "a", "c"], algorithm="alg1", m=16)
    assert report.p0_hat == pytest.approx(0.5)
    assert report.n_hat == pytest.approx(2.0 * report.n_s_hat)

    stream = [f"tok{i % 800}" for i in range(4000)]
    exact = sampcard.estimate_tokens(stream, algorithm="alg1", m=256, seed=3)
    sub = sampcard.estimate_tokens(stream, algorithm="alg2", m=256, u=100000, seed=3)
    assert sub.p0_hat == exact.p0_hat
    assert sub.n_hat == exact.n_hat


def test_degenerate_sample_raises():
    with pytest.raises(sampcard.DegenerateSampleError):
        sampcard.estimate_values(list(range(50)), algorithm="alg1", m=64)


def test_reservoir_and_bernoulli():
    reservoir = sampcard.ReservoirSubsample(10, seed=1)
    for v in [1, 2, 1, 3]:
        reservoir.offer(v)
    assert reservoir.singleton_count() == 2

    sampler = sampcard.BernoulliSampler(1.0, seed=0)
    assert all(sampler.offer() for _ in range(100))
    assert sampler.kept == 100


def test_analysis_formulas():
    freqs = [100] * 50
    assert sampcard.expected_p0(freqs, 0.01) == pytest.approx(math.exp(-1))
    assert sampcard.rel_variance_exact(0.0, 0.0, 1000.0, 64.0) == pytest.approx(1 / 64)

    split = sampcard.optimal_split(100, 0.0, 1.0)
    assert (split.m, split.u) == (50, 50)

    grid = sampcard.FrequencyModel.parse("uniform:100:10000").quantile_grid()
    p0 = sampcard.expected_p0(grid, 0.01)
    p1 = sampcard.expected_p1(grid, 0.01)
    assert sampcard.rel_variance_exact(p0, p1, 505000.0, 50.0) == pytest.approx(0.02, rel=1e-3)


def test_run_trials():
    result = sampcard.run_trials(
        distinct=500, model="uniform:100:10000", rate=0.01, m=64,
        algorithm="alg1", trials=20, seed=9)
    assert result.trials == 20
    assert result.degenerate_count == 0
    assert result.mean_ratio == pytest.approx(1.0, abs=0.15)
    assert result.rel_variance is not None
