"""Deterministic rational parameter sampling for identity checks.

All draws are Fractions strictly inside their stated domains with a margin,
so annulus and pole constraints hold with room to spare; a fixed seed
reproduces the exact same assignment.
"""

from __future__ import annotations

import random
import zlib
from fractions import Fraction

from ..errors import EmptyDomainError

MARGIN = Fraction(1, 20)  # 0.05 as specified for domain boundaries


def entry_rng(seed: int, entry_id: str, mode: str) -> random.Random:
    """Independent, reproducible stream per (seed, entry, mode)."""
    tag = zlib.crc32(f"{entry_id}:{mode}".encode())
    return random.Random((seed << 32) ^ tag)


def rational_in(rng: random.Random, lo, hi, den: int = 48) -> Fraction:
    """Fraction strictly inside (lo, hi) on a 1/den grid."""
    lo, hi = Fraction(lo), Fraction(hi)
    lo_i = int(lo * den) + 1
    hi_i = int(hi * den) - (1 if Fraction(int(hi * den), den) >= hi else 0)
    if hi_i < lo_i:
        raise EmptyDomainError(f"no grid point strictly inside ({lo}, {hi})")
    return Fraction(rng.randint(lo_i, hi_i), den)


def rational_nonzero(rng: random.Random, lo, hi, den: int = 48) -> Fraction:
    for _ in range(64):
        v = rational_in(rng, lo, hi, den)
        if v != 0:
            return v
    raise EmptyDomainError(f"only zero available in ({lo}, {hi})")


def annulus_pair(rng: random.Random, den: int = 48):
    """(a, b, z) with |b/a| + margin < |z| < 1 - margin."""
    a = rational_in(rng, Fraction(2, 5), Fraction(9, 10), den)
    b = a * rational_in(rng, Fraction(1, 20), Fraction(2, 5), den)
    lo = b / a + MARGIN
    z = rational_in(rng, lo, 1 - MARGIN, den * 4)
    return a, b, z


def distinct_rationals(rng: random.Random, count: int, lo, hi,
                       den: int = 48, avoid=()):
    """``count`` distinct draws avoiding the given values."""
    out = []
    guard = 0
    while len(out) < count:
        v = rational_in(rng, lo, hi, den)
        if v not in out and v not in avoid:
            out.append(v)
        guard += 1
        if guard > 200 * count:
            raise EmptyDomainError("could not find enough distinct samples")
    return out


def pole_avoiding(rng: random.Random, q: Fraction, lo, hi, depth: int = 40,
                  den: int = 48) -> Fraction:
    """Rational a with every factor 1 - a q^{-j} (j <= depth) bounded away
    from zero: rejection sampling against the exact pole set a = q^{j}, with
    the stated margin scaled per pole."""
    poles = [q ** -j for j in range(1, depth + 1) if abs(q) ** -j <= hi * 2]
    poles += [q ** j for j in range(0, depth + 1) if q ** j >= lo / 2]
    for _ in range(256):
        a = rational_in(rng, lo, hi, den)
        if all(abs(a - p) > MARGIN * max(Fraction(1), abs(p)) for p in poles):
            return a
    raise EmptyDomainError("pole-avoiding sampling exhausted its attempts")
