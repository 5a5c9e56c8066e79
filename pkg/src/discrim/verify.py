"""Umbrella verification suites: every headline claim as a pass/fail check.

Each suite recomputes a documented claim by an independent route (brute force
against closed form, exact arithmetic against fast criteria, scans against
listings) and returns CheckResults. `run_suites` is the single entry point
used by both the CLI and the acceptance tests.
"""

from __future__ import annotations

import math
import multiprocessing
import os
import random
from dataclasses import dataclass

from . import census as census_mod
from . import charsum as charsum_mod
from .discriminator import (
    VERDICT_NON_VALUE,
    VERDICT_UNDECIDED,
    discriminator_brute,
    image_of_discriminator,
    nonvalue_screen,
    salajan_discriminator_closed,
    table_ranges,
    verify_discriminates,
)
from .numtheory import artin_constant, lte_valuation, padic_valuation, primes_up_to
from .periods import (
    incongruence_index,
    iota_equals_rho_scan,
    iota_prime_bound,
    period_brute,
    salajan_period_formula,
)
from .sequences import salajan

# soft-check tolerances, declared in one place on purpose: the density and
# equidistribution targets are asymptotic constants, not finite identities
TOLERANCES = {
    "density_relative": 0.05,      # census at x = 10^6 vs predicted densities
    "artin_abs": 1e-6,             # partial product at prime_limit = 10^6
    "fset_ratio_abs": 0.01,        # F-set count ratio at x = 10^5 vs beta
    "charsum_lower_slack": 1e-6,   # sqrt(|A|) lower bound, numeric slack
    "charsum_upper_margin": 1e-9,  # |A^| <= sqrt(p) holds with equality; fp margin
    "identity_relative": 1e-6,     # pair-count residual, relative to |G|
}

# the 20 reference rows reproduced by table_ranges(32768)
EXPECTED_TABLE = [
    (1, 1, 1), (2, 2, 2), (3, 4, 4), (5, 8, 8), (9, 16, 16),
    (17, 20, 25), (21, 32, 32), (33, 64, 64), (65, 100, 125), (101, 128, 128),
    (129, 256, 256), (257, 512, 512), (513, 1024, 1024), (1025, 2048, 2048),
    (2049, 2500, 3125), (2501, 4096, 4096), (4097, 8192, 8192),
    (8193, 12500, 15625), (12501, 16384, 16384), (16385, 32768, 32768),
]

# reference prime-class listings up to 300
LISTED_P1 = [5, 17, 29, 53, 89, 101, 113, 137, 149, 173, 197, 233, 257, 269, 281, 293]
LISTED_P2 = [11, 23, 47, 59, 71, 83, 107, 131, 167, 179, 191, 227, 239, 251, 263]
LISTED_P3 = [7, 19, 31, 43, 79, 127, 139, 163, 199, 211, 223, 283]

# equality cases iota(p) = rho(p): four anchor primes, each re-verified by
# brute force, and the frozen result of the exhaustive scan up to 2000
IOTA_EQ_RHO_ANCHORS = [193, 1093, 1181, 1871]
IOTA_EQ_RHO_SCAN_2000 = [2, 5, 13, 41, 73, 193, 757, 769, 1093, 1181, 1597, 1621, 1871]

ARTIN_TARGET = 0.3739558136
DENSITY_TARGETS = {"P1": 0.224373488, "P2": 0.224373488, "P3": 0.149582325}
BETA_TARGET = 0.6781


@dataclass(frozen=True)
class CheckResult:
    suite: str
    passed: bool
    detail: str


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("DISCRIM_JOBS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items, jobs):
    if jobs > 1 and len(items) > 1:
        with multiprocessing.Pool(jobs) as pool:
            return pool.map(fn, items)
    return [fn(x) for x in items]


# ---------------------------------------------------------------- table


def check_table(n_max: int = 32768) -> CheckResult:
    rows = table_ranges(n_max)
    if n_max == 32768:
        ok = rows == EXPECTED_TABLE
        detail = f"{len(rows)} rows, expected 20 reference rows: {'match' if ok else 'MISMATCH'}"
        return CheckResult("table", ok, detail)
    return CheckResult("table", bool(rows), f"{len(rows)} rows up to n={n_max}")


# ---------------------------------------------------------------- theorem1


def _brute_chunk(bounds: tuple[int, int]) -> list[int]:
    lo, hi = bounds
    bad = []
    for n in range(lo, hi + 1):
        if discriminator_brute(salajan(), n).value != salajan_discriminator_closed(n).value:
            bad.append(n)
    return bad


def check_theorem1(n_max: int = 4096, jobs: int | None = None) -> CheckResult:
    """Brute force equals the closed form for every n <= n_max, and the
    closed-form value is tight at every tabulated range boundary."""
    jobs = jobs or default_jobs()
    step = max(64, n_max // max(jobs * 8, 1))
    chunks = [(lo, min(lo + step - 1, n_max)) for lo in range(1, n_max + 1, step)]
    mismatches = [n for part in _pmap(_brute_chunk, chunks, jobs) for n in part]

    seq = salajan()
    boundaries = sorted({r[0] for r in EXPECTED_TABLE} | {r[1] for r in EXPECTED_TABLE})
    bad_bounds = []
    failing_moduli = 0
    for n in boundaries:
        d = salajan_discriminator_closed(n).value
        if not verify_discriminates(seq, n, d):
            bad_bounds.append((n, d, "claimed value fails"))
            continue
        for m in range(n, d):
            failing_moduli += 1
            if verify_discriminates(seq, n, m):
                bad_bounds.append((n, m, "smaller modulus works"))
                break
    ok = not mismatches and not bad_bounds
    detail = (
        f"brute=closed for n<=n_max ({n_max}), {len(boundaries)} boundaries tight "
        f"({failing_moduli} smaller moduli all fail)"
    )
    if mismatches:
        detail = f"closed/brute mismatch at n={mismatches[:10]}"
    if bad_bounds:
        detail += f"; boundary failures: {bad_bounds[:5]}"
    return CheckResult("theorem1", ok, detail)


# ---------------------------------------------------------------- periods


def check_periods(d_max: int = 5000) -> CheckResult:
    seq = salajan()
    bad = []
    for d in range(2, d_max + 1):
        got = period_brute(seq, d)
        want = salajan_period_formula(d)
        if (got.pre_period, got.period) != (want.pre_period, want.period):
            bad.append((d, got, want))
    anchors_ok = True
    for e in range(1, 21):
        if salajan_period_formula(2**e).period != 2**e:
            anchors_ok = False
    for e in range(1, 11):
        info = salajan_period_formula(3**e)
        if info.period != 2 or info.pre_period != e:
            anchors_ok = False
    five = salajan_period_formula(5)
    nine = salajan_period_formula(9)
    anchors_ok = anchors_ok and five.period == 4 and nine.pre_period == 2
    ok = not bad and anchors_ok
    detail = f"formula = cycle detection for 2<=d<={d_max}; anchor periods hold"
    if bad:
        detail = f"period mismatch at d={[(b[0]) for b in bad[:10]]}"
    elif not anchors_ok:
        detail = "anchor period values failed"
    return CheckResult("periods", ok, detail)


# ---------------------------------------------------------------- iota anchors


def check_iota_anchors(prime_limit: int = 2000) -> CheckResult:
    seq = salajan()
    if incongruence_index(seq, 29) != 14:
        return CheckResult("iota-anchors", False, "iota(29) != 14")
    found = iota_equals_rho_scan(prime_limit)
    missing = [p for p in IOTA_EQ_RHO_ANCHORS if p not in found]
    wrong = [p for p in (7, 29, 307) if p in found]
    # independent re-verification of every reported equality case
    confirmed = []
    for p in found:
        rho_b = period_brute(seq, p).period
        if incongruence_index(seq, p) == rho_b:
            confirmed.append(p)
    # negative anchor: 307 does NOT satisfy iota = rho — the first collision
    # is u_17 = u_2 (mod 307), so iota(307) = 16, while the period is 34
    neg_ok = incongruence_index(seq, 307) == 16 and period_brute(seq, 307).period == 34
    frozen_ok = found == IOTA_EQ_RHO_SCAN_2000 if prime_limit == 2000 else True
    extras = [p for p in confirmed if p not in IOTA_EQ_RHO_ANCHORS]
    ok = not missing and not wrong and confirmed == found and neg_ok and frozen_ok
    detail = (
        f"iota(29)=14; scan({prime_limit}) = {found}, all re-verified against "
        f"brute periods; iota(307)=16 < 34=rho(307); extras beyond the four "
        f"anchor primes: {extras}"
    )
    if missing:
        detail = f"anchor equality cases missing from scan: {missing}"
    if wrong:
        detail += f"; scan wrongly contains {wrong}"
    if not neg_ok:
        detail += "; negative anchor 307 failed"
    if not frozen_ok:
        detail += f"; scan result drifted from frozen list {IOTA_EQ_RHO_SCAN_2000}"
    return CheckResult("iota-anchors", ok, detail)


# ---------------------------------------------------------------- iota bounds


def _iota_bound_chunk(bounds: tuple[int, int]) -> list[int]:
    seq = salajan()
    lo, hi = bounds
    bad = []
    for p in primes_up_to(hi).tolist():
        if p <= max(5, lo - 1):
            continue
        if incongruence_index(seq, p) > iota_prime_bound(p):
            bad.append(p)
    return bad


def check_iota_bounds(prime_limit: int = 100_000, jobs: int | None = None) -> CheckResult:
    jobs = jobs or default_jobs()
    step = max(5000, prime_limit // max(jobs * 4, 1))
    chunks = [(lo, min(lo + step - 1, prime_limit)) for lo in range(2, prime_limit + 1, step)]
    bad = [p for part in _pmap(_iota_bound_chunk, chunks, jobs) for p in part]
    ok = not bad
    detail = f"iota(p) <= min((p-1)/2, 4p^0.75) for all primes 5 < p <= {prime_limit}"
    if bad:
        detail = f"bound violated at p={bad[:10]}"
    return CheckResult("iota-bounds", ok, detail)


# ---------------------------------------------------------------- valuation


def check_valuation(n_max: int = 200) -> CheckResult:
    cases = 0
    bad = []
    for p in (2, 3, 5, 7):
        rs = {p + 1, 2 * p + 1}
        if (9 - 1) % p == 0:
            rs.add(9)
        for r in sorted(rs):
            for n in range(1, n_max + 1):
                want = padic_valuation(p, r**n - 1)
                got = lte_valuation(p, r, n)
                cases += 1
                if got != want:
                    bad.append((p, r, n, got, want))
    ok = not bad
    detail = f"closed formula = exact valuation of r^n - 1 in {cases} cases"
    if bad:
        detail = f"valuation mismatch: {bad[:5]}"
    return CheckResult("valuation", ok, detail)


# ---------------------------------------------------------------- screen


def _is_power_of(base: int, d: int) -> bool:
    while d % base == 0:
        d //= base
    return d == 1


def check_screen(sound_limit: int = 32768, complete_limit: int = 4096) -> CheckResult:
    """Soundness: no attained value is certified non_value. Completeness at
    desk scale: every non-image d (powers of 2 and 5 aside) is certified."""
    values = sorted({row[2] for row in table_ranges(sound_limit)})
    unsound = []
    for v in values:
        if v < 2:
            continue
        cert = nonvalue_screen(v)
        if cert.verdict != VERDICT_UNDECIDED:
            unsound.append((v, cert.reason))
    image = set(image_of_discriminator(complete_limit))
    holes = []
    certified = 0
    for d in range(2, complete_limit + 1):
        if d in image or _is_power_of(2, d) or _is_power_of(5, d):
            continue
        cert = nonvalue_screen(d)
        if cert.verdict != VERDICT_NON_VALUE:
            holes.append(d)
        else:
            certified += 1
    ok = not unsound and not holes
    detail = (
        f"{len(values)} attained values all undecided; "
        f"{certified} non-image d <= {complete_limit} certified non_value"
    )
    if unsound:
        detail = f"values wrongly certified: {unsound[:5]}"
    if holes:
        detail += f"; non-values left undecided: {holes[:10]}"
    return CheckResult("screen", ok, detail)


# ---------------------------------------------------------------- census


def check_census(x: int = 1_000_000) -> CheckResult:
    got = {"P1": [], "P2": [], "P3": [], "none": []}
    for p in primes_up_to(300).tolist():
        if p > 3:
            got[census_mod.classify_prime(p).pclass].append(p)
    listing_ok = got["P1"] == LISTED_P1 and got["P2"] == LISTED_P2 and got["P3"] == LISTED_P3

    report = census_mod.census_scan(x)
    tol = TOLERANCES["density_relative"]
    off = {
        c: report.empirical[c] / DENSITY_TARGETS[c] - 1
        for c in DENSITY_TARGETS
    }
    dens_ok = all(abs(v) <= tol for v in off.values())
    ok = listing_ok and dens_ok
    detail = (
        f"listings <= 300 match; densities at x={x}: "
        + ", ".join(f"{c} {report.empirical[c]:.6f} ({off[c]:+.2%})" for c in sorted(off))
        + f" within {tol:.0%}"
    )
    if not listing_ok:
        detail = "class listings <= 300 do not match the reference sets"
    if not dens_ok:
        detail += "; density deviation out of tolerance"
    return CheckResult("census", ok, detail)


# ---------------------------------------------------------------- artin


def check_artin(prime_limit: int = 1_000_000) -> CheckResult:
    value = artin_constant(prime_limit)
    err = abs(value - ARTIN_TARGET)
    ok = err <= TOLERANCES["artin_abs"]
    return CheckResult(
        "artin", ok, f"partial product at {prime_limit} = {value:.10f}, |err| = {err:.2e}"
    )


# ---------------------------------------------------------------- fset


def check_fset(b_max: int = 100_000) -> CheckResult:
    first_six = [census_mod.fset_member_interval(b).member for b in range(1, 7)]
    want = [False, True, True, False, True, True]
    head_ok = first_six == want

    records = census_mod.fset_scan_interval(b_max)
    disagree = [r.b for r in records if census_mod.fset_member_weyl(r.b) != r.member]

    count, ratio, beta = census_mod.fset_count(b_max)
    ratio_ok = abs(ratio - BETA_TARGET) <= TOLERANCES["fset_ratio_abs"]
    beta_ok = abs(beta - BETA_TARGET) < 1e-4

    ok = head_ok and not disagree and ratio_ok and beta_ok
    detail = (
        f"b=1..6 membership matches; interval = weyl for all b <= {b_max}; "
        f"count {count}, ratio {ratio:.5f} vs beta {beta:.5f}"
    )
    if not head_ok:
        detail = f"b=1..6 membership wrong: {first_six}"
    if disagree:
        detail += f"; methods disagree at b={disagree[:10]}"
    if not ratio_ok:
        detail += "; ratio out of tolerance"
    return CheckResult("fset", ok, detail)


# ---------------------------------------------------------------- charsum


def check_charsum(prime_limit: int = 300, seed: int = 20260816) -> CheckResult:
    """The maximum nontrivial character sum over A is a Jacobi sum in disguise,
    so its modulus is exactly sqrt(p); the check is sqrt(p-2) <= |A^| <= sqrt(p)
    with float margins, and it additionally confirms the saturation."""
    slack = TOLERANCES["charsum_lower_slack"]
    margin = TOLERANCES["charsum_upper_margin"]
    bad = []
    saturated = 0
    n_primes = 0
    for p in primes_up_to(prime_limit).tolist():
        if p <= 5:
            continue
        n_primes += 1
        a = charsum_mod.build_A(p)
        ahat = charsum_mod.max_nontrivial_char_sum(a, p - 1)
        if len(a) != p - 2:
            bad.append((p, "size", len(a)))
        if not (math.sqrt(p - 2) - slack <= ahat <= math.sqrt(p) + margin):
            bad.append((p, "bounds", ahat))
        if abs(ahat - math.sqrt(p)) <= margin:
            saturated += 1

    rng = random.Random(seed)
    residual_bad = []
    instances = 0
    for p in (7, 11, 13, 23, 47):
        n = p - 1
        a = charsum_mod.build_A(p)
        for _ in range(10):
            size = rng.randint(1, min(10, n * n))
            b = {(rng.randrange(n), rng.randrange(n)) for _ in range(size)}
            _, _, residual = charsum_mod.pair_count_identity_check(a, b, n)
            instances += 1
            if residual > TOLERANCES["identity_relative"] * n * n:
                residual_bad.append((p, residual))

    # consistency with the incongruence index: iota(p) < 3 + 4p^(3/4) on P
    chain_bad = []
    seq = salajan()
    for p in primes_up_to(2000).tolist():
        if p <= 5:
            continue
        if census_mod.classify_prime(p).pclass != "none":
            if incongruence_index(seq, p) >= 3 + 4 * p**0.75:
                chain_bad.append(p)

    ok = not bad and not residual_bad and not chain_bad
    detail = (
        f"|A| = p-2 and sqrt(p-2) <= |A^| <= sqrt(p) for 5 < p <= {prime_limit} "
        f"(saturates sqrt(p) at {saturated}/{n_primes} primes: Jacobi-sum modulus); "
        f"{instances} randomized pair-count identities within tolerance; "
        f"iota chain bound holds on P up to 2000"
    )
    if bad:
        detail = f"set/bound failures: {bad[:5]}"
    if residual_bad:
        detail += f"; identity residuals too big: {residual_bad[:5]}"
    if chain_bad:
        detail += f"; chain bound failed at p={chain_bad[:5]}"
    return CheckResult("charsum", ok, detail)


# ---------------------------------------------------------------- note


def check_note() -> CheckResult:
    """The density and equidistribution targets are asymptotic (and partly
    GRH-conditional), so finite scans check them only to declared tolerances;
    this records those tolerances rather than pretending to take a limit."""
    ok = (
        TOLERANCES["density_relative"] == 0.05
        and TOLERANCES["fset_ratio_abs"] == 0.01
        and abs(census_mod.BETA - BETA_TARGET) < 1e-4
        and abs(3 * census_mod.ARTIN_CONSTANT / 5 - DENSITY_TARGETS["P1"]) < 1e-9
        and abs(2 * census_mod.ARTIN_CONSTANT / 5 - DENSITY_TARGETS["P3"]) < 1e-9
    )
    detail = (
        "asymptotic claims are checked as finite scans with declared tolerances: "
        f"density {TOLERANCES['density_relative']:.0%} relative, "
        f"F-set ratio {TOLERANCES['fset_ratio_abs']} absolute"
    )
    return CheckResult("note", ok, detail)


# ---------------------------------------------------------------- runner

SUITES = {
    "table": check_table,
    "theorem1": check_theorem1,
    "periods": check_periods,
    "iota-anchors": check_iota_anchors,
    "iota-bounds": check_iota_bounds,
    "valuation": check_valuation,
    "screen": check_screen,
    "census": check_census,
    "artin": check_artin,
    "fset": check_fset,
    "charsum": check_charsum,
    "note": check_note,
}


def run_suites(names, n_max: int | None = None, jobs: int | None = None):
    """Run the named suites ('all' for everything); returns (ok, results)."""
    if isinstance(names, str):
        names = list(SUITES) if names == "all" else [names]
    results = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
        fn = SUITES[name]
        if name == "theorem1":
            results.append(fn(n_max or 4096, jobs))
        elif name == "iota-bounds":
            results.append(fn(jobs=jobs))
        else:
            results.append(fn())
    return all(r.passed for r in results), results
