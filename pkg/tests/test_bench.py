import pytest

import katankit.bench as bench
from katankit.errors import BenchConfigError, EquivalenceError
from katankit.bench import parse_engine, run_bench


@pytest.mark.parametrize(
    "text,expected",
    [
        ("scalar", ("scalar", None)),
        ("SCALAR", ("scalar", None)),
        ("bitsliced-1", ("bitsliced-1", 1)),
        ("bitsliced-32", ("bitsliced-32", 32)),
        ("bitsliced-64", ("bitsliced-64", 64)),
    ],
)
def test_parse_engine(text, expected):
    assert parse_engine(text) == expected


@pytest.mark.parametrize("bad", ["simd", "bitsliced-", "bitsliced-0", "bitsliced-65", "bitsliced-x"])
def test_parse_engine_rejects(bad):
    with pytest.raises(BenchConfigError):
        parse_engine(bad)


def test_run_bench_config_errors():
    with pytest.raises(BenchConfigError):
        run_bench("katan32", blocks=0)
    with pytest.raises(BenchConfigError):
        run_bench("katan32", reps=0)


def test_engines_agree_on_digest():
    a = run_bench("katan32", "scalar", blocks=96, reps=1, seed=42)
    b = run_bench("katan32", "bitsliced-16", blocks=96, reps=1, seed=42)
    # the digest covers the same 64-block sample in both runs
    assert a.sample_digest == b.sample_digest
    assert a.engine == "scalar" and b.lanes == 16
    assert a.throughput_mbps > 0
    assert len(a.rep_times_s) == 1
    assert a.min_s <= a.wall_time_s <= a.max_s


def test_same_seed_same_digest():
    a = run_bench("ktantan48", "scalar", blocks=8, reps=1, seed=7)
    b = run_bench("ktantan48", "scalar", blocks=8, reps=1, seed=7)
    c = run_bench("ktantan48", "scalar", blocks=8, reps=1, seed=8)
    assert a.sample_digest == b.sample_digest
    assert a.sample_digest != c.sample_digest


def test_equivalence_gate_trips_on_disagreement(monkeypatch):
    real = bench._run_bitsliced

    def corrupted(params, key, blocks, lanes):
        out = real(params, key, blocks, lanes)
        out[0] ^= 1
        return out

    monkeypatch.setattr(bench, "_run_bitsliced", corrupted)
    with pytest.raises(EquivalenceError, match="disagrees with scalar"):
        run_bench("katan32", "bitsliced-8", blocks=16, reps=1)


def test_dispersion_property():
    r = run_bench("katan32", "bitsliced-32", blocks=64, reps=3, seed=3)
    assert r.dispersion >= 1.0
