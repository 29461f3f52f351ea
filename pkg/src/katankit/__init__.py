"""KATAN/KTANTAN block cipher kit.

Scalar and bit-sliced engines for all six variants, a cycle model of a
three-stage encryption pipeline, throughput arithmetic with printed-
precision validation, and a service/CLI surface for vectors, benchmarks,
and report tables.
"""

__version__ = "0.1.0"

from .bitslice import decrypt_batch, encrypt_batch
from .core import decrypt_block, encrypt_block
from .counter import ir_sequence
from .keyschedule import katan_subkeys, ktantan_subkeys, subkeys
from .params import VARIANTS, CipherParams, parse_variant

__all__ = [
    "__version__",
    "VARIANTS",
    "CipherParams",
    "parse_variant",
    "encrypt_block",
    "decrypt_block",
    "encrypt_batch",
    "decrypt_batch",
    "katan_subkeys",
    "ktantan_subkeys",
    "subkeys",
    "ir_sequence",
]
