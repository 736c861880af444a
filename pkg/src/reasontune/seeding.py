"""Stable seed derivation for reproducible, order-independent evaluation.

Built-in hash() is randomized per process, so sub-seeds are derived from a
SHA-256 digest of the stringified key parts instead.
"""

from __future__ import annotations

import hashlib
import random


def derive_seed(*parts: object) -> int:
    """Derive a 64-bit seed from an arbitrary key, stable across processes."""
    key = "\x1f".join(str(p) for p in parts)
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def rng_for(*parts: object) -> random.Random:
    """A fresh PRNG keyed by the given parts."""
    return random.Random(derive_seed(*parts))
