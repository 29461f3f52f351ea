"""Static parameters for the six KATAN/KTANTAN variants.

Both families share the register geometry, feedback taps, and round count;
they differ only in how the per-round subkey bits are produced. Block bit i
carries weight 2**i; L2 is the low half of the block and L1 the high half.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidVariantError

ROUNDS = 254
KEY_BITS = 80
KEY_HEX_DIGITS = KEY_BITS // 4

FAMILY_KATAN = "katan"
FAMILY_KTANTAN = "ktantan"


@dataclass(frozen=True)
class CipherParams:
    name: str
    family: str
    block_bits: int
    len_l1: int
    len_l2: int
    taps_x: tuple[int, int, int, int, int]
    taps_y: tuple[int, int, int, int, int, int]
    steps_per_round: int
    rounds: int = ROUNDS

    def __post_init__(self) -> None:
        if self.len_l1 + self.len_l2 != self.block_bits:
            raise ValueError("register lengths must sum to the block size")
        if any(t >= self.len_l1 or t < 0 for t in self.taps_x):
            raise ValueError("L1 tap out of range")
        if any(t >= self.len_l2 or t < 0 for t in self.taps_y):
            raise ValueError("L2 tap out of range")
        if self.rounds != ROUNDS:
            raise ValueError("round count is fixed at 254")

    @property
    def block_hex_digits(self) -> int:
        return self.block_bits // 4


# Geometry per block size: (len_l1, len_l2, taps_x, taps_y, steps_per_round).
# taps_x[0] and taps_y[0] are the register MSBs, which decrypt relies on.
_GEOMETRY = {
    32: (13, 19, (12, 7, 8, 5, 3), (18, 7, 12, 10, 8, 3), 1),
    48: (19, 29, (18, 12, 15, 7, 6), (28, 19, 21, 13, 15, 6), 2),
    64: (25, 39, (24, 15, 20, 11, 9), (38, 25, 33, 21, 14, 9), 3),
}


def _build_variants() -> dict[str, CipherParams]:
    variants = {}
    for family in (FAMILY_KATAN, FAMILY_KTANTAN):
        for bits, (l1, l2, tx, ty, steps) in _GEOMETRY.items():
            name = f"{family}{bits}"
            variants[name] = CipherParams(
                name=name,
                family=family,
                block_bits=bits,
                len_l1=l1,
                len_l2=l2,
                taps_x=tx,
                taps_y=ty,
                steps_per_round=steps,
            )
    return variants


VARIANTS: dict[str, CipherParams] = _build_variants()

# "katantan" appears in some writeups for the fixed-key family; accept it.
_ALIASES = {f"katantan{bits}": f"ktantan{bits}" for bits in _GEOMETRY}


def parse_variant(name: str) -> CipherParams:
    """Resolve a variant name, case-insensitively, accepting both the
    canonical ktantanNN spelling and the katantanNN alias."""
    key = name.strip().lower().replace("-", "").replace("_", "")
    key = _ALIASES.get(key, key)
    try:
        return VARIANTS[key]
    except KeyError:
        known = ", ".join(sorted(VARIANTS))
        raise InvalidVariantError(f"unknown variant {name!r}; expected one of {known}") from None


def variant_names() -> list[str]:
    return sorted(VARIANTS)
