"""Prime classification census and the F-set of exponents.

Primes p > 3 split by p mod 4 and the order of 3: class P1 (1 mod 4, 3 a
primitive root), P2 (3 mod 4, ord_3(p) = (p-1)/2), P3 (3 mod 4, 3 a primitive
root). Their union is exactly the set with ord_9(p) = (p-1)/2, and under GRH
their densities are 3A/5, 3A/5, 2A/5 with A the Artin constant.

The F-set collects the exponents b >= 1 such that [4*5^(b-1), 5^b] contains
no power of 2; exactly those 5^b occur as discriminator values. Membership is
decided exactly with integers, or fast via the fractional-part criterion
{b*log2(5)} <= log2(5) - 2, which characterizes the complement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .numtheory import is_prime, iter_prime_blocks, mult_order

ARTIN_CONSTANT = 0.3739558136
DENSITY_P1 = 3 * ARTIN_CONSTANT / 5
DENSITY_P2 = 3 * ARTIN_CONSTANT / 5
DENSITY_P3 = 2 * ARTIN_CONSTANT / 5

# density of the F-set among b <= x
BETA = 3 - math.log2(5)

CLASS_P1 = "P1"
CLASS_P2 = "P2"
CLASS_P3 = "P3"
CLASS_NONE = "none"


@dataclass(frozen=True)
class PrimeClassRecord:
    p: int
    residue_mod_4: int
    ord3: int
    pclass: str


@dataclass(frozen=True)
class FsetRecord:
    b: int
    member: bool
    witness: int | None   # the power of 2 inside the interval when member is False


@dataclass(frozen=True)
class DensityReport:
    x: int
    pi_x: int
    counts: dict
    empirical: dict
    predicted: dict
    deviation: dict   # relative: empirical/predicted - 1


def classify_prime(p: int) -> PrimeClassRecord:
    """Class of a prime p > 3 from p mod 4 and ord_3(p)."""
    if p <= 3 or not is_prime(p):
        raise ValueError("classification needs a prime p > 3")
    ord3 = mult_order(3, p)
    r4 = p % 4
    if r4 == 1 and ord3 == p - 1:
        pclass = CLASS_P1
    elif r4 == 3 and ord3 == p - 1:
        pclass = CLASS_P3
    elif r4 == 3 and 2 * ord3 == p - 1:
        pclass = CLASS_P2
    else:
        pclass = CLASS_NONE
    return PrimeClassRecord(p, r4, ord3, pclass)


def census_scan(x: int) -> DensityReport:
    """Classify every prime 3 < p <= x and tally densities against predictions."""
    if x < 5:
        raise ValueError("scan limit must be >= 5")
    counts = {CLASS_P1: 0, CLASS_P2: 0, CLASS_P3: 0, CLASS_NONE: 0}
    pi_x = 0
    for block in iter_prime_blocks(x):
        pi_x += len(block)
        for p in block.tolist():
            if p <= 3:
                continue
            counts[classify_prime(p).pclass] += 1
    predicted = {CLASS_P1: DENSITY_P1, CLASS_P2: DENSITY_P2, CLASS_P3: DENSITY_P3}
    empirical = {c: counts[c] / pi_x for c in predicted}
    deviation = {c: empirical[c] / predicted[c] - 1 for c in predicted}
    return DensityReport(x, pi_x, counts, empirical, predicted, deviation)


def _interval_state(b: int) -> tuple[int, int]:
    """(low, k) with low = 4*5^(b-1) and k minimal such that 2^k >= low."""
    low = 4 * 5 ** (b - 1)
    return low, (low - 1).bit_length()


def fset_member_interval(b: int) -> FsetRecord:
    """Exact membership: does [4*5^(b-1), 5^b] miss every power of 2?

    The smallest candidate power is 2^k with k minimal such that 2^k >= low,
    so the interval contains a power of 2 iff that 2^k is still <= 5^b.
    Comparisons go through bit lengths; no power of 2 never equals a power
    of 5, so bit-length comparison is exact here.
    """
    if b < 1:
        raise ValueError("b must be positive")
    low, k = _interval_state(b)
    upper = low + (low >> 2)   # 5^b = 5*low/4, and low is divisible by 4
    member = k >= upper.bit_length()
    return FsetRecord(b, member, None if member else 1 << k)


def fset_scan_interval(b_max: int) -> list[FsetRecord]:
    """Exact membership for all b <= b_max, tracking exponents incrementally.

    The loop keeps only (low, bit lengths); the witness power of 2 for a
    non-member is materialized per record, so no giant integers accumulate.
    """
    if b_max < 1:
        raise ValueError("b_max must be positive")
    out = []
    low = 4
    for b in range(1, b_max + 1):
        k = (low - 1).bit_length()
        upper = low + (low >> 2)
        member = k >= upper.bit_length()
        out.append(FsetRecord(b, member, None if member else 1 << k))
        low *= 5
    return out


_FIX_BITS = 192
_FIX_ONE = 1 << _FIX_BITS


def _alpha_fixed() -> int:
    """log2(5) as a 192-bit fixed-point integer, error below 2 units."""
    with mpmath.workprec(_FIX_BITS + 64):
        return int(mpmath.floor(mpmath.log(5) / mpmath.log(2) * _FIX_ONE))


_ALPHA_FIX = _alpha_fixed()
_THRESHOLD = _ALPHA_FIX - 2 * _FIX_ONE   # fixed-point alpha - 2, in (0, 1)


def fset_member_weyl(b: int) -> bool:
    """Fast membership via the fractional-part criterion.

    b is OUTSIDE the F-set exactly when {b*alpha} <= alpha - 2 for
    alpha = log2(5). Computed in 192-bit fixed point; any b whose fractional
    part lands within the accumulated error margin of the threshold (or of
    the wraparound at 0/1) is handed to the exact interval method instead.
    """
    if b < 1:
        raise ValueError("b must be positive")
    frac = (b * _ALPHA_FIX) & (_FIX_ONE - 1)
    margin = 4 * (b + 2)   # fixed-point units; alpha error < 2 units scales by b
    if (
        abs(frac - _THRESHOLD) <= margin
        or frac <= margin
        or _FIX_ONE - frac <= margin
    ):
        return fset_member_interval(b).member
    return frac > _THRESHOLD


def fset_count(x: int) -> tuple[int, float, float]:
    """(count of b <= x in the F-set, count/x, expected density beta)."""
    if x < 1:
        raise ValueError("x must be positive")
    count = 0
    low = 4
    for _ in range(x):
        k = (low - 1).bit_length()
        upper = low + (low >> 2)
        if k >= upper.bit_length():
            count += 1
        low *= 5
    return count, count / x, BETA
