"""Exact integer building blocks: primality, factoring, orders, valuations.

Everything here is deterministic. Primality uses a Miller-Rabin witness set
that is exhaustive for 64-bit inputs, factoring is trial division plus
Pollard rho with Brent cycling, and multiplicative orders are computed by
reducing the Carmichael exponent rather than by iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

U64_MAX = 2**64 - 1

# exhaustive witness set for n < 3.3e24, comfortably covers 64 bits
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SIEVE_BLOCK = 1 << 20


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def recompose(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


def is_prime(n: int) -> bool:
    """Deterministic primality test for 1 <= n <= 2^64 - 1."""
    if not 1 <= n <= U64_MAX:
        raise ValueError("is_prime expects 1 <= n <= 2^64 - 1")
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (plain sieve, used for small limits)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


_SMALL_PRIMES: list[int] = [int(p) for p in _simple_sieve(4096)]


def iter_prime_blocks(limit: int, block: int = _SIEVE_BLOCK):
    """Yield int64 arrays of primes <= limit, segmented for cache friendliness."""
    if limit < 2:
        return
    base = _simple_sieve(math.isqrt(limit))
    lo = 2
    while lo <= limit:
        hi = min(lo + block - 1, limit)
        mask = np.ones(hi - lo + 1, dtype=bool)
        for p in base:
            p = int(p)
            if p * p > hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            mask[start - lo :: p] = False
        if lo <= 1:
            mask[: 2 - lo] = False
        seg = np.nonzero(mask)[0] + lo
        # base primes below sqrt(limit) are composite-marked from p*p only,
        # so they survive their own segment correctly
        yield seg.astype(np.int64)
        lo = hi + 1


def primes_up_to(limit: int) -> np.ndarray:
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(list(iter_prime_blocks(limit)))


def _pollard_brent(n: int) -> int:
    """Nontrivial factor of an odd composite n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m = 2, 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = math.gcd(abs(x - y), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # pragma: no cover


def factorize(n: int) -> Factorization:
    """Full prime factorization for 1 <= n <= 2^64 - 1; n = 1 has no factors."""
    if not 1 <= n <= U64_MAX:
        raise ValueError("factorize expects 1 <= n <= 2^64 - 1")
    value = n
    counts: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                counts[m] = counts.get(m, 0) + 1
                continue
            d = _pollard_brent(m)
            stack.append(d)
            stack.append(m // d)
    return Factorization(value, tuple(sorted(counts.items())))


def padic_valuation(p: int, n: int) -> int:
    """Exponent of the prime p in n; n must be nonzero."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if p < 2 or not is_prime(p):
        raise ValueError("p must be prime")
    n = abs(n)
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return a


def modpow(base: int, exp: int, modulus: int) -> int:
    """base^exp mod modulus, result in [0, modulus)."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base, exp, modulus)


def euler_phi(n: int) -> int:
    out = 1
    for p, e in factorize(n).factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def carmichael_lambda(m: int) -> int:
    """Exponent of the unit group mod m."""
    if m < 1:
        raise ValueError("m must be positive")
    lam = 1
    for p, e in factorize(m).factors:
        if p == 2:
            part = 2 ** max(e - 2, 0) if e >= 3 else 2 ** (e - 1)
        else:
            part = (p - 1) * p ** (e - 1)
        lam = math.lcm(lam, part)
    return lam


def mult_order(a: int, m: int) -> int:
    """Least t >= 1 with a^t = 1 mod m, via reduction of lambda(m)."""
    if m < 2:
        raise ValueError("m must be >= 2")
    a %= m
    if math.gcd(a, m) != 1:
        raise ValueError(f"gcd({a}, {m}) != 1, order undefined")
    t = carmichael_lambda(m)
    for q, _ in factorize(t).factors:
        while t % q == 0 and pow(a, t // q, m) == 1:
            t //= q
    return t


def lte_valuation(p: int, r: int, n: int) -> int:
    """v_p(r^n - 1) by the lifting-the-exponent closed formula.

    Needs r = 1 mod p and r not in {-1, 1}. For p = 2 with n even the
    valuation is v2(n) + v2(r^2 - 1) - 1, otherwise v_p(n) + v_p(r - 1).
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    if n < 1:
        raise ValueError("n must be positive")
    if r in (-1, 1):
        raise ValueError("r = +-1 makes r^n - 1 degenerate")
    if (r - 1) % p != 0:
        raise ValueError(f"r must be 1 mod {p}")
    if p == 2 and n % 2 == 0:
        return padic_valuation(2, n) + padic_valuation(2, r * r - 1) - 1
    return padic_valuation(p, n) + padic_valuation(p, r - 1)


def is_primitive_root(g: int, q: int) -> bool:
    """True iff g generates the units mod q; q must be an odd prime power."""
    fac = factorize(q).factors
    if len(fac) != 1 or fac[0][0] == 2:
        raise ValueError("q must be an odd prime power")
    if math.gcd(g, q) != 1:
        raise ValueError(f"gcd({g}, {q}) != 1")
    p, k = fac[0]
    return mult_order(g, q) == (p - 1) * p ** (k - 1)


def smallest_primitive_root(p: int) -> int:
    """Smallest primitive root mod an odd prime p."""
    if p < 3 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    qs = [q for q, _ in factorize(p - 1).factors]
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
        g += 1


def artin_constant(prime_limit: int) -> float:
    """Partial product of prod_p (1 - 1/(p(p-1))) over primes p <= prime_limit.

    Accumulates log terms with compensated summation; monotone nonincreasing
    in prime_limit.
    """
    if prime_limit < 2:
        raise ValueError("prime_limit must be >= 2")
    partials = []
    for block in iter_prime_blocks(prime_limit):
        p = block.astype(np.float64)
        partials.append(math.fsum(np.log1p(-1.0 / (p * (p - 1.0))).tolist()))
    return math.exp(math.fsum(partials))
