"""Throughput arithmetic and printed-precision comparison.

clock_period is ns per MHz, exec_time is cycles over MHz (microseconds),
throughput is bits per microsecond (numerically Mbps). Display rounding is
4 significant figures; every comparison against a printed value happens at
the printed value's own precision, because printed tables round before
they print.
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal

from .errors import InvalidMetricError

DISPLAY_SIG_FIGS = 4


def clock_period_ns(fmax_mhz: float) -> float:
    if fmax_mhz <= 0:
        raise InvalidMetricError(f"fmax must be positive, got {fmax_mhz!r}")
    return 1000.0 / fmax_mhz


def exec_time_us(total_clock_cycles: float, fmax_mhz: float) -> float:
    if fmax_mhz <= 0:
        raise InvalidMetricError(f"fmax must be positive, got {fmax_mhz!r}")
    if total_clock_cycles < 0:
        raise InvalidMetricError(f"cycle count must be >= 0, got {total_clock_cycles!r}")
    return total_clock_cycles / fmax_mhz


def throughput_mbps(numerator_bits: float, exec_time_us_: float) -> float:
    if exec_time_us_ <= 0:
        raise InvalidMetricError(f"exec time must be positive, got {exec_time_us_!r}")
    if numerator_bits <= 0:
        raise InvalidMetricError(f"bit count must be positive, got {numerator_bits!r}")
    return numerator_bits / exec_time_us_


def speedup(throughput_2: float, throughput_1: float) -> float:
    if throughput_1 <= 0:
        raise InvalidMetricError(f"reference throughput must be positive, got {throughput_1!r}")
    return throughput_2 / throughput_1


def format_sig(value: float, figures: int = DISPLAY_SIG_FIGS) -> str:
    """Decimal string with the given number of significant figures."""
    if value == 0:
        return "0.000"
    d = Decimal(repr(value))
    shift = figures - d.adjusted() - 1
    q = d.scaleb(shift).quantize(Decimal(1), rounding=ROUND_HALF_UP).scaleb(-shift)
    return format(q, "f")


def printed_places(printed: str) -> int:
    """Number of decimal places in a printed value ("12.300" -> 3)."""
    exp = Decimal(printed).as_tuple().exponent
    return max(0, -int(exp))


def ulp_distance(printed: str, recomputed: float) -> int:
    """Distance in last-printed-digit units between a printed value and a
    recomputed one, after rounding the recomputation to the printed
    precision (half-up, the way tables round before printing)."""
    target = Decimal(printed)
    quantum = Decimal(1).scaleb(-printed_places(printed))
    rounded = Decimal(repr(recomputed)).quantize(quantum, rounding=ROUND_HALF_UP)
    return int(abs((rounded - target) / quantum))


def matches_printed(printed: str, recomputed: float, tolerance_ulps: int = 1) -> bool:
    """True when the recomputed value regenerates the printed one within
    the given number of units in the last printed digit."""
    return ulp_distance(printed, recomputed) <= tolerance_ulps
