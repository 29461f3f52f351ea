"""Test-vector files and the hex conventions shared by all interfaces.

A vector file is plain text, one record per line: variant, key (20 hex
digits), plaintext, ciphertext (block_bits/4 hex digits each), separated
by whitespace. Lines starting with '#' are comments. Hex is written most
significant nibble first and denotes the canonical integer form, where
bit i carries weight 2**i; bit_reverse() converts to and from the
opposite convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidBlockError, InvalidKeyError, VectorParseError
from .params import KEY_HEX_DIGITS, CipherParams, parse_variant


def _parse_fixed_hex(text: str, hex_digits: int, what: str) -> int:
    if len(text) != hex_digits or not all(c in "0123456789abcdefABCDEF" for c in text):
        raise ValueError(f"bad {what}: expected {hex_digits} hex digits, got {text!r}")
    return int(text, 16)


def parse_key_hex(text: str) -> int:
    try:
        return _parse_fixed_hex(text, KEY_HEX_DIGITS, "key")
    except ValueError as exc:
        raise InvalidKeyError(str(exc)) from None


def parse_block_hex(text: str, params: CipherParams) -> int:
    try:
        return _parse_fixed_hex(text, params.block_hex_digits, f"{params.name} block")
    except ValueError as exc:
        raise InvalidBlockError(str(exc)) from None


def format_key_hex(key: int) -> str:
    return f"{key:0{KEY_HEX_DIGITS}x}"


def format_block_hex(block: int, params: CipherParams) -> str:
    return f"{block:0{params.block_hex_digits}x}"


def bit_reverse(value: int, width: int) -> int:
    out = 0
    for _ in range(width):
        out = (out << 1) | (value & 1)
        value >>= 1
    return out


@dataclass(frozen=True)
class VectorRecord:
    line_no: int
    params: CipherParams
    key: int
    plaintext: int
    ciphertext: int


def parse_vector_lines(lines: Iterable[str]) -> list[VectorRecord]:
    records = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 4:
            raise VectorParseError(
                line_no, f"expected 4 fields (variant key plaintext ciphertext), got {len(fields)}"
            )
        name, key_hex, pt_hex, ct_hex = fields
        try:
            params = parse_variant(name)
            key = parse_key_hex(key_hex)
            pt = parse_block_hex(pt_hex, params)
            ct = parse_block_hex(ct_hex, params)
        except (InvalidKeyError, InvalidBlockError) as exc:
            raise VectorParseError(line_no, str(exc)) from None
        except Exception as exc:
            raise VectorParseError(line_no, str(exc)) from None
        records.append(
            VectorRecord(line_no=line_no, params=params, key=key, plaintext=pt, ciphertext=ct)
        )
    return records


def parse_vector_text(text: str) -> list[VectorRecord]:
    return parse_vector_lines(text.splitlines())


def format_vector_line(params: CipherParams, key: int, pt: int, ct: int) -> str:
    return (
        f"{params.name} {format_key_hex(key)} "
        f"{format_block_hex(pt, params)} {format_block_hex(ct, params)}"
    )
