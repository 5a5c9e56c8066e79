"""Periodicity mod d and the incongruence index.

For the flagship sequence, writing d = 3^a * delta with 3 not dividing delta,
the eventual period mod d is rho(d) = 2*ord_9(4*delta) and the pre-period is
max(1, a); pre_period == 1 means purely periodic. The incongruence index
iota(m) is the largest k such that the first k terms are pairwise incongruent
mod m; always iota(m) <= m.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numtheory import is_prime, mult_order, primes_up_to
from .sequences import (
    POLYNOMIAL,
    CapExceeded,
    SequenceSpec,
    distinct_prefix_length,
    salajan,
)


@dataclass(frozen=True)
class PeriodInfo:
    modulus: int
    pre_period: int   # minimal n0; 1 means purely periodic
    period: int


def period_brute(spec: SequenceSpec, d: int, cap: int | None = None) -> PeriodInfo:
    """Exact pre-period and period mod d by first-occurrence cycle detection.

    A pair of consecutive residues determines all later ones, so the state
    walk (v_n, v_{n+1}) mod d enters a cycle; the first repeated state gives
    both quantities exactly. Cost O(pre_period + period) states.
    """
    if d < 2:
        raise ValueError("modulus must be >= 2")
    if spec.kind == POLYNOMIAL:
        raise ValueError("period detection needs a linear recurrence")
    if cap is None:
        cap = 4 * d + 64
    c1, c2, v1, v2 = spec.as_recurrence()
    x = v1 % d
    y = v2 % d
    first: dict[int, int] = {}
    for idx in range(1, cap + 1):
        key = x * d + y
        prev = first.get(key)
        if prev is not None:
            return PeriodInfo(d, prev, idx - prev)
        first[key] = idx
        x, y = y, (c1 * y + c2 * x) % d
    raise CapExceeded(f"no repeated state within {cap} steps mod {d}")


def salajan_period_formula(d: int) -> PeriodInfo:
    """Closed-form period 2*ord_9(4*delta) and pre-period max(1, a) for d = 3^a * delta."""
    if d < 2:
        raise ValueError("modulus must be >= 2")
    alpha = 0
    delta = d
    while delta % 3 == 0:
        alpha += 1
        delta //= 3
    return PeriodInfo(d, max(1, alpha), 2 * mult_order(9, 4 * delta))


def incongruence_index(spec: SequenceSpec, m: int, cap: int | None = None) -> int:
    """Largest k with v_1..v_k pairwise incongruent mod m.

    Streams residues until the first repeat. Since iota(m) <= m, reaching m
    distinct residues settles the answer without seeing the repeat.
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    if cap is None:
        cap = m + 1
    bound = min(cap, m)
    k = distinct_prefix_length(spec, m, bound)
    if k == bound and bound < m:
        raise CapExceeded(f"no repeat within cap {cap} and fewer than {m} residues seen")
    return k


def iota_equals_rho_scan(prime_limit: int) -> list[int]:
    """Primes p <= prime_limit with 3 not dividing p and iota(p) = rho(p).

    Equality forces the whole cycle mod p to be repeat-free, which is rare;
    the scan enumerates every occurrence, it does not decide whether there
    are infinitely many.
    """
    if prime_limit < 5:
        raise ValueError("prime_limit must be >= 5")
    seq = salajan()
    out = []
    for p in primes_up_to(prime_limit):
        p = int(p)
        if p == 3:
            continue
        rho = salajan_period_formula(p).period
        # iota <= rho for purely periodic moduli, so one extra step decides
        if distinct_prefix_length(seq, p, rho + 1) >= rho:
            if incongruence_index(seq, p) == rho:
                out.append(p)
    return out


def iota_prime_bound(p: int) -> float:
    """The proven ceiling min((p-1)/2, 4p^(3/4)) on iota(p) for primes p > 5."""
    if p <= 5 or not is_prime(p):
        raise ValueError("bound applies to primes p > 5")
    return min((p - 1) / 2, 4.0 * p**0.75)
