import pytest

from katankit.errors import InvalidMetricError
from katankit.metrics import (
    clock_period_ns,
    exec_time_us,
    format_sig,
    matches_printed,
    printed_places,
    speedup,
    throughput_mbps,
    ulp_distance,
)


def test_clock_period():
    assert format_sig(clock_period_ns(358.55)) == "2.789"
    assert format_sig(clock_period_ns(500.0)) == "2.000"


def test_exec_time():
    assert format_sig(exec_time_us(3626, 358.55)) == "10.11"
    assert exec_time_us(0, 358.55) == 0.0
    with pytest.raises(InvalidMetricError):
        exec_time_us(-1, 358.55)
    with pytest.raises(InvalidMetricError):
        exec_time_us(100, 0)


def test_throughput():
    t = exec_time_us(3626, 358.55)
    assert format_sig(throughput_mbps(32, t)) == "3.164"
    with pytest.raises(InvalidMetricError):
        throughput_mbps(32, 0)


def test_speedup_guards():
    assert speedup(10.0, 2.0) == 5.0
    with pytest.raises(InvalidMetricError):
        speedup(1.0, 0.0)


@pytest.mark.parametrize(
    "value,figures,expected",
    [
        (12.3456, 4, "12.35"),
        (0.00123449, 4, "0.001234"),
        (1234.5, 4, "1235"),  # ties round away from zero
        (263.666, 5, "263.67"),
        (0.5, 1, "0.5"),
        (95000.0, 2, "95000"),
    ],
)
def test_format_sig(value, figures, expected):
    assert format_sig(value, figures) == expected


@pytest.mark.parametrize(
    "printed,places",
    [("12.300", 3), ("28.00", 2), ("0.00088", 5), ("3164", 0)],
)
def test_printed_places(printed, places):
    assert printed_places(printed) == places


def test_ulp_distance_rounds_then_compares():
    # the recomputed value is first rounded to the printed precision
    assert ulp_distance("0.0030", 0.0028885) == 1
    assert ulp_distance("12.300", 12.3) == 0
    assert ulp_distance("2.5643", 2.5057) == 586
    assert ulp_distance("28.00", 27.96) == 4


def test_matches_printed():
    assert matches_printed("10.11", 10.1128)
    assert matches_printed("0.0030", 0.0028885)
    assert not matches_printed("2.5643", 2.5057)
