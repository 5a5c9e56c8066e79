"""Additive character sums over Z_{p-1} x Z_{p-1} for the set A.

A = {(x, y) : 3g^x - g^y = 30 mod p} for a primitive root g mod p. The set
has exactly p-2 elements, its maximal nontrivial character sum |A^| sits in
[sqrt(p-2), sqrt(p)), and the standard orthogonality identity counts pairs
(b, b') with b + b' in A. These are desk-scale numeric verifications, not a
production path, so the sizes are guarded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numtheory import is_prime, mult_order, smallest_primitive_root

MAX_DIRECT_PRIME = 500     # O(p^3) enumeration guard
MAX_DFT_ORDER = 4096       # (p-1) x (p-1) grid guard for the DFT path

# double precision leaves plenty of room under the 1e-6 identity tolerance:
# each character sum adds at most p^2 unit-modulus terms
FLOAT_SLACK = 1e-9


@dataclass(frozen=True)
class CharSumReport:
    p: int
    g: int
    setA_size: int
    max_nontrivial_sum: float
    sqrt_p: float
    identity_residual: float


def _resolve_root(p: int, g: int | None) -> int:
    if p <= 5 or not is_prime(p):
        raise ValueError("p must be a prime > 5 (30 degenerates mod 2, 3, 5)")
    if g is None:
        return smallest_primitive_root(p)
    if math.gcd(g, p) != 1 or mult_order(g, p) != p - 1:
        raise ValueError(f"{g} is not a primitive root mod {p}")
    return g


def build_A(p: int, g: int | None = None) -> set[tuple[int, int]]:
    """The pair set {(x, y) in Z_{p-1}^2 : 3g^x - g^y = 30 mod p}, in O(p).

    For each x there is exactly one residue 3g^x - 30, which is a power of g
    unless it is 0; indexing a discrete-log table turns it into the unique y.
    """
    g = _resolve_root(p, g)
    n = p - 1
    dlog = [0] * p
    cur = 1
    for x in range(n):
        dlog[cur] = x
        cur = cur * g % p
    out = set()
    cur = 1
    for x in range(n):
        rhs = (3 * cur - 30) % p
        if rhs:
            out.add((x, dlog[rhs]))
        cur = cur * g % p
    return out


def _indicator_grid(pairs, n: int) -> np.ndarray:
    grid = np.zeros((n, n), dtype=np.float64)
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise ValueError(f"pair {(x, y)} outside Z_{n} x Z_{n}")
        grid[x, y] += 1.0
    return grid


def max_nontrivial_char_sum(pairs, group_order: int, method: str = "auto") -> float:
    """max over (s,t) != (0,0) of |sum over (x,y) in A of e^(2pi*i(sx+ty)/n)|.

    The DFT of the indicator grid evaluates every character at once; the
    direct path multiplies out roots of unity and exists as an independent
    cross-check for small orders.
    """
    pairs = set(pairs)
    if not pairs:
        raise ValueError("character sums over an empty set are degenerate")
    n = group_order
    if n < 2:
        raise ValueError("a group of order 1 has no nontrivial characters")
    if method == "auto":
        method = "dft"
    if method == "dft":
        if n > MAX_DFT_ORDER:
            raise ValueError(f"group order {n} exceeds DFT guard {MAX_DFT_ORDER}")
        grid = _indicator_grid(pairs, n)
        spectrum = np.abs(np.fft.rfft2(grid))
        spectrum[0, 0] = -1.0   # trivial character excluded
        # real input: the missing half-plane mirrors the magnitudes present
        return float(spectrum.max())
    if method == "direct":
        if n + 1 > MAX_DIRECT_PRIME:
            raise ValueError(f"direct enumeration guarded at p <= {MAX_DIRECT_PRIME}")
        roots = np.exp(2j * np.pi * np.arange(n) / n)
        xs = np.fromiter((x for x, _ in sorted(pairs)), dtype=np.int64, count=len(pairs))
        ys = np.fromiter((y for _, y in sorted(pairs)), dtype=np.int64, count=len(pairs))
        ss = np.arange(n).reshape(-1, 1)
        ex = roots[(ss * xs) % n]   # (n, |A|) with entries e(s*x/n)
        ey = roots[(ss * ys) % n]
        sums = ex @ ey.T            # entry (s, t) = sum_k e((s*x_k + t*y_k)/n)
        mags = np.abs(sums)
        mags[0, 0] = -1.0
        return float(mags.max())
    raise ValueError(f"unknown method {method!r}")


def pair_count_identity_check(pairs_a, pairs_b, group_order: int):
    """(direct_count, charsum_count, residual) for N = #{(b,b') : b+b' in A}.

    The direct count loops over B x B; the character side evaluates
    N = (1/|G|) * sum over all characters of B^(psi)^2 * A^(psi conjugate),
    main term included. The residual is the absolute difference and must sit
    within numeric tolerance of zero.
    """
    a = set(pairs_a)
    b = set(pairs_b)
    if not a or not b:
        raise ValueError("identity check needs nonempty sets")
    n = group_order
    if n > MAX_DFT_ORDER:
        raise ValueError(f"group order {n} exceeds DFT guard {MAX_DFT_ORDER}")
    direct = 0
    blist = list(b)
    for x1, y1 in blist:
        for x2, y2 in blist:
            if ((x1 + x2) % n, (y1 + y2) % n) in a:
                direct += 1
    fa = np.fft.fft2(_indicator_grid(a, n))
    fb = np.fft.fft2(_indicator_grid(b, n))
    charsum = np.sum(np.conj(fb) ** 2 * fa) / (n * n)
    residual = abs(direct - charsum)
    return direct, float(charsum.real), float(residual)


def bplusb_bound_check(p: int, pairs_b, g: int | None = None) -> bool:
    """Check |B| <= |A^|*|G|/(|A| + |A^|) for a B with (B+B) disjoint from A.

    Disjointness over ordered pairs is verified first and a violation is a
    rejection, not a False. A False return from the size bound itself flags a
    bug, the inequality being a theorem.
    """
    g = _resolve_root(p, g)
    a = build_A(p, g)
    b = set(pairs_b)
    if not b:
        raise ValueError("B must be nonempty")
    n = p - 1
    blist = list(b)
    for x1, y1 in blist:
        for x2, y2 in blist:
            s = ((x1 + x2) % n, (y1 + y2) % n)
            if s in a:
                raise ValueError(
                    f"B+B meets A: ({x1},{y1}) + ({x2},{y2}) = {s} lies in A"
                )
    ahat = max_nontrivial_char_sum(a, n)
    bound = ahat * (n * n) / (len(a) + ahat)
    return len(b) <= bound


def prime_lemma_bound(n: int) -> float:
    """floor(n/4)^(4/3): every prime discriminating u_1..u_n must exceed this."""
    if n < 4:
        raise ValueError("bound needs n >= 4")
    return float(n // 4) ** (4.0 / 3.0)


def char_sum_report(p: int, g: int | None = None) -> CharSumReport:
    """Bundle the standard verifications for one prime into a report."""
    g = _resolve_root(p, g)
    a = build_A(p, g)
    n = p - 1
    ahat = max_nontrivial_char_sum(a, n)
    _, _, residual = pair_count_identity_check(a, a, n)
    return CharSumReport(
        p=p,
        g=g,
        setA_size=len(a),
        max_nontrivial_sum=ahat,
        sqrt_p=math.sqrt(p),
        identity_residual=residual,
    )
