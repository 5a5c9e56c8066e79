"""The discriminator: brute-force engine, closed form, screens, certificates.

The discriminator D_v(n) of a sequence v is the smallest modulus m such that
v_1, ..., v_n are pairwise incongruent mod m. For the flagship sequence the
closed form is D(n) = min(2^e, 5^f) with e the least exponent where 2^e >= n
and f the least where 5^f >= 5n/4; the brute-force engine exists to verify
that claim independently, and the non-value screens certify which integers
never occur as D(n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .census import fset_member_interval
from .charsum import prime_lemma_bound
from .numtheory import euler_phi, factorize, is_prime, mult_order
from .periods import incongruence_index, salajan_period_formula
from .sequences import (
    SALAJAN,
    CapExceeded,
    SequenceNotAdmissible,
    SequenceSpec,
    distinct_prefix_length,
    salajan,
    term_exact,
)

METHOD_CLOSED = "closed_form"
METHOD_BRUTE = "brute_force"
METHOD_BOTH = "verified_both"

VERDICT_NON_VALUE = "non_value"
VERDICT_UNDECIDED = "undecided"

REASON_DIV3 = "divisible_by_3"
REASON_PERIOD = "period_screen"
REASON_COMPOSITE = "composite_screen"
REASON_ORDER = "order_screen"
REASON_IOTA = "iota_screen"
REASON_BUDGET = "budget_exceeded"

# any prime this large that discriminated n >= (p+1)/2 terms would have to
# exceed floor(n/4)^(4/3), which is impossible once n >= 2060
BIG_PRIME_REPORT_FLOOR = 2060


@dataclass(frozen=True)
class DiscriminatorRecord:
    n: int
    value: int
    method: str


@dataclass(frozen=True)
class NonValueCertificate:
    d: int
    verdict: str
    reason: str | None
    witness: dict


def verify_discriminates(spec: SequenceSpec, n: int, m: int) -> bool:
    """True iff v_1..v_n are pairwise distinct mod m (single-modulus check)."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    if m < n:
        return False   # pigeonhole: n values cannot fit m classes
    return distinct_prefix_length(spec, m, n) == n


def _check_admissible(spec: SequenceSpec, n: int) -> None:
    seen: dict[int, int] = {}
    for j in range(1, n + 1):
        t = term_exact(spec, j)
        if t in seen:
            raise SequenceNotAdmissible(
                f"terms {seen[t]} and {j} are both {t}; no modulus can separate them"
            )
        seen[t] = j


def discriminator_brute(
    spec: SequenceSpec, n: int, search_cap: int | None = None
) -> DiscriminatorRecord:
    """Least m with v_1..v_n pairwise distinct mod m, by increasing-m scan.

    Candidates start at m = n (pigeonhole) and each one gets a fresh
    membership check that aborts on the first collision. The default cap is
    2n for the flagship sequence (a proven ceiling) and 4n otherwise; raise
    it for sequences whose discriminator grows faster.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if search_cap is None:
        search_cap = 2 * n if spec.kind == SALAJAN else 4 * n
    if search_cap < n:
        raise ValueError("search_cap must be at least n")
    if spec.kind != SALAJAN:
        _check_admissible(spec, n)
    for m in range(max(n, 1), search_cap + 1):
        if distinct_prefix_length(spec, m, n) == n:
            return DiscriminatorRecord(n, m, METHOD_BRUTE)
    raise CapExceeded(f"no modulus <= {search_cap} separates the first {n} terms")


def salajan_discriminator_closed(n: int) -> DiscriminatorRecord:
    """Closed-form D(n) = min(2^e, 5^f), by integer comparison only.

    e is the least exponent with 2^e >= n and f the least with 4*5^f >= 5n;
    repeated multiplication instead of logarithms because boundaries like
    n = 4*5^k + 1 sit exactly where floating point rounds the wrong way.
    """
    if n < 1:
        raise ValueError("n must be positive")
    pow2 = 1
    while pow2 < n:
        pow2 <<= 1
    pow5 = 1
    while 4 * pow5 < 5 * n:
        pow5 *= 5
    return DiscriminatorRecord(n, min(pow2, pow5), METHOD_CLOSED)


def salajan_discriminator_checked(n: int, search_cap: int | None = None) -> DiscriminatorRecord:
    """Closed form cross-checked against the brute-force engine."""
    closed = salajan_discriminator_closed(n)
    brute = discriminator_brute(salajan(), n, search_cap)
    if closed.value != brute.value:
        raise AssertionError(
            f"method disagreement at n={n}: closed={closed.value} brute={brute.value}"
        )
    return DiscriminatorRecord(n, closed.value, METHOD_BOTH)


def table_ranges(n_max: int) -> list[tuple[int, int, int]]:
    """Closed-form values over 1..n_max compressed into (start, end, value) rows."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    rows: list[list[int]] = []
    for n in range(1, n_max + 1):
        v = salajan_discriminator_closed(n).value
        if rows and rows[-1][2] == v:
            rows[-1][1] = n
        else:
            rows.append([n, n, v])
    return [tuple(r) for r in rows]


def image_of_discriminator(limit: int) -> list[int]:
    """All discriminator values <= limit: powers of 2, plus 5^b for b in the F-set."""
    if limit < 1:
        raise ValueError("limit must be positive")
    values = set()
    v = 1
    while v <= limit:
        values.add(v)
        v <<= 1
    b, pw = 1, 5
    while pw <= limit:
        if fset_member_interval(b).member:
            values.add(pw)
        b += 1
        pw *= 5
    return sorted(values)


def _attach_big_prime_report(d: int, witness: dict) -> None:
    # reporting aid: a prime value d would need some n >= (d+1)/2, yet any
    # prime discriminating that many terms must exceed floor(n/4)^(4/3)
    if d > BIG_PRIME_REPORT_FLOOR and is_prime(d):
        min_n = (d + 1) // 2
        if min_n >= 4:
            witness["prime_min_n"] = min_n
            witness["prime_floor_bound"] = prime_lemma_bound(min_n)


def nonvalue_screen(d: int, iota_budget: int | None = None) -> NonValueCertificate:
    """Certify d as a non-value of the flagship discriminator, or stay undecided.

    Screens run in order: multiples of 3 are never values; a period rho(d) at
    most d/2 forces a collision among any d/2+1 consecutive indices; moduli
    with two coprime parts > 1 inherit a short period; odd prime powers whose
    order of 9 is submaximal cannot be values; finally the incongruence index
    itself is computed and compared with d/2. A non_value verdict is sound;
    undecided makes no claim either way.
    """
    if d < 2:
        raise ValueError("screen expects d >= 2")
    if d % 3 == 0:
        return NonValueCertificate(d, VERDICT_NON_VALUE, REASON_DIV3, {"d_mod_3": 0})

    # from here on 3 does not divide d, so the sequence is purely periodic mod d
    rho = salajan_period_formula(d).period
    if 2 * rho <= d:
        return NonValueCertificate(d, VERDICT_NON_VALUE, REASON_PERIOD, {"rho": rho})

    fac = factorize(d).factors
    if len(fac) > 1:
        p0, e0 = fac[0]
        part1 = p0**e0
        return NonValueCertificate(
            d,
            VERDICT_NON_VALUE,
            REASON_COMPOSITE,
            {"coprime_part_1": part1, "coprime_part_2": d // part1},
        )

    p, mexp = fac[0]
    if p > 3:
        # powers of 2 are genuine values with ord_9(2^m) = 2^(m-3), so the
        # submaximal-order screen is sound only for odd prime powers
        ord9 = mult_order(9, d)
        phi = (p - 1) * p ** (mexp - 1)
        if 2 * ord9 < phi:
            return NonValueCertificate(
                d,
                VERDICT_NON_VALUE,
                REASON_ORDER,
                {"p": p, "exponent": mexp, "ord9": ord9, "phi": phi},
            )

    witness: dict = {}
    try:
        iota = incongruence_index(salajan(), d, cap=iota_budget)
    except CapExceeded:
        witness["iota_budget"] = iota_budget
        _attach_big_prime_report(d, witness)
        return NonValueCertificate(d, VERDICT_UNDECIDED, REASON_BUDGET, witness)
    witness["iota"] = iota
    _attach_big_prime_report(d, witness)
    if 2 * iota <= d:
        return NonValueCertificate(d, VERDICT_NON_VALUE, REASON_IOTA, witness)
    return NonValueCertificate(d, VERDICT_UNDECIDED, None, witness)


def recheck_certificate(cert: NonValueCertificate) -> bool:
    """Recompute a certificate's claim from its witness fields alone."""
    d, w = cert.d, cert.witness
    if cert.verdict == VERDICT_UNDECIDED:
        return True   # no claim to falsify
    if cert.verdict != VERDICT_NON_VALUE:
        return False
    if cert.reason == REASON_DIV3:
        return d % 3 == 0
    if cert.reason == REASON_PERIOD:
        return (
            d % 3 != 0
            and salajan_period_formula(d).period == w["rho"]
            and 2 * w["rho"] <= d
        )
    if cert.reason == REASON_COMPOSITE:
        a, b = w["coprime_part_1"], w["coprime_part_2"]
        return d % 3 != 0 and a > 1 and b > 1 and a * b == d and math.gcd(a, b) == 1
    if cert.reason == REASON_ORDER:
        p, e = w["p"], w["exponent"]
        return (
            p > 3
            and is_prime(p)
            and p**e == d
            and mult_order(9, d) == w["ord9"]
            and euler_phi(d) == w["phi"]
            and 2 * w["ord9"] < w["phi"]
        )
    if cert.reason == REASON_IOTA:
        return incongruence_index(salajan(), d) == w["iota"] and 2 * w["iota"] <= d
    return False
