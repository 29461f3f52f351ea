"""Regenerate the bundled test-vector files.

Each variant gets 100 vectors: four degenerate key/plaintext corners
(all-zero and all-one in both positions), then seeded random pairs.
Ciphertexts come from the scalar engine, so the files pin the engine's
current behaviour; rerunning this script after a functional change will
rewrite them and any diff is a compatibility break.

Usage: python3 scripts/generate_fixtures.py [--seed 2024] [--count 100]
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path

from katankit.core import encrypt_block
from katankit.params import VARIANTS
from katankit.vectors import format_vector_line

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "katankit" / "data"


def corner_pairs(block_bits: int) -> list[tuple[int, int]]:
    key_ones = (1 << 80) - 1
    block_ones = (1 << block_bits) - 1
    return [(0, 0), (0, block_ones), (key_ones, 0), (key_ones, block_ones)]


def generate(variant: str, seed: int, count: int) -> list[str]:
    params = VARIANTS[variant]
    rng = random.Random(seed)
    lines = [
        f"# {variant} test vectors: variant key plaintext ciphertext (hex)",
        f"# generated by scripts/generate_fixtures.py, seed={seed}",
    ]
    pairs = corner_pairs(params.block_bits)
    while len(pairs) < count:
        pairs.append((rng.getrandbits(80), rng.getrandbits(params.block_bits)))
    for key, pt in pairs:
        ct = encrypt_block(pt, key, params)
        lines.append(format_vector_line(params, key, pt, ct))
    return lines


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--count", type=int, default=100)
    args = parser.parse_args()
    for variant in sorted(VARIANTS):
        path = DATA_DIR / f"vectors_{variant}.txt"
        lines = generate(variant, args.seed, args.count)
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(f"wrote {path} ({len(lines) - 2} vectors)")


if __name__ == "__main__":
    main()
