"""Round counter and IR sequence.

An 8-bit LFSR doubles as the round counter. It starts from the all-ones
state and shifts left once per round with feedback
x8 + x7 + x5 + x3 + 1, so bit 6 of the state traces the irregular-update
sequence IR used by the round function. The orbit is maximal (period 255
over the nonzero states), so the 254 states visited during the rounds are
distinct and nonzero.
"""

from __future__ import annotations

from functools import lru_cache

from .params import ROUNDS

COUNTER_BITS = 8
COUNTER_INIT = 0xFF


def _next_state(s: int) -> int:
    fb = ((s >> 7) ^ (s >> 6) ^ (s >> 4) ^ (s >> 2)) & 1
    return ((s << 1) | fb) & 0xFF


@lru_cache(maxsize=1)
def counter_states() -> tuple[int, ...]:
    """State of the round counter at the start of each round, rounds 0..253."""
    states = []
    s = COUNTER_INIT
    for _ in range(ROUNDS):
        states.append(s)
        s = _next_state(s)
    return tuple(states)


@lru_cache(maxsize=1)
def ir_sequence() -> tuple[int, ...]:
    """IR bit per round: bit 6 of the counter state."""
    return tuple((s >> 6) & 1 for s in counter_states())
