"""Prime classification, density census, and the F-set of exponents."""

import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from discrim.census import (
    ARTIN_CONSTANT,
    BETA,
    DENSITY_P1,
    DENSITY_P2,
    DENSITY_P3,
    census_scan,
    classify_prime,
    fset_count,
    fset_member_interval,
    fset_member_weyl,
    fset_scan_interval,
)
from discrim.verify import LISTED_P1, LISTED_P2, LISTED_P3


def interval_misses_powers_of_2(b):
    """Direct oracle: scan every power of 2 up to 5^b."""
    low, high = 4 * 5 ** (b - 1), 5**b
    power = 1
    while power <= high:
        if low <= power <= high:
            return False, power
        power *= 2
    return True, None


# ------------------------------------------------------------------ classification


@pytest.mark.parametrize(
    "p,pclass",
    [(5, "P1"), (7, "P3"), (11, "P2"), (13, "none"), (17, "P1"), (19, "P3"),
     (23, "P2"), (29, "P1"), (41, "none"), (307, "none"), (1093, "none")],
)
def test_classify_anchors(p, pclass):
    rec = classify_prime(p)
    assert rec.pclass == pclass
    assert rec.p == p and rec.residue_mod_4 == p % 4
    assert rec.ord3 == sympy.n_order(3, p)


def test_classify_rules():
    for p in sympy.primerange(5, 500):
        rec = classify_prime(p)
        if rec.pclass == "P1":
            assert p % 4 == 1 and rec.ord3 == p - 1
        elif rec.pclass == "P2":
            assert p % 4 == 3 and 2 * rec.ord3 == p - 1
        elif rec.pclass == "P3":
            assert p % 4 == 3 and rec.ord3 == p - 1
        else:
            assert not (
                (p % 4 == 1 and rec.ord3 == p - 1)
                or (p % 4 == 3 and rec.ord3 in (p - 1, (p - 1) // 2))
            )


def test_classify_validation():
    for bad in (2, 3, 4, 15):
        with pytest.raises(ValueError):
            classify_prime(bad)


def test_listings_below_300():
    got = {"P1": [], "P2": [], "P3": []}
    for p in sympy.primerange(5, 301):
        rec = classify_prime(p)
        if rec.pclass in got:
            got[rec.pclass].append(p)
    assert got["P1"] == LISTED_P1
    assert got["P2"] == LISTED_P2
    assert got["P3"] == LISTED_P3


# ------------------------------------------------------------------ the census


def test_census_scan_small():
    report = census_scan(10_000)
    assert report.pi_x == 1229                      # pi(10^4)
    assert sum(report.counts.values()) == 1229 - 2  # p = 2, 3 are unclassified
    for cls in ("P1", "P2", "P3"):
        assert report.empirical[cls] == report.counts[cls] / report.pi_x
        assert report.deviation[cls] == report.empirical[cls] / report.predicted[cls] - 1
    assert report.predicted == {"P1": DENSITY_P1, "P2": DENSITY_P2, "P3": DENSITY_P3}
    with pytest.raises(ValueError):
        census_scan(4)


def test_density_constants():
    assert ARTIN_CONSTANT == pytest.approx(0.3739558136, abs=1e-10)
    assert DENSITY_P1 == DENSITY_P2 == pytest.approx(3 * ARTIN_CONSTANT / 5)
    assert DENSITY_P3 == pytest.approx(2 * ARTIN_CONSTANT / 5)
    assert DENSITY_P1 + DENSITY_P2 + DENSITY_P3 == pytest.approx(8 * ARTIN_CONSTANT / 5)
    assert BETA == pytest.approx(3 - math.log2(5), abs=0)
    assert BETA == pytest.approx(0.6780719051, abs=1e-9)


def test_census_tracks_predictions_loosely_at_10_5():
    report = census_scan(100_000)
    for cls in ("P1", "P2", "P3"):
        assert abs(report.deviation[cls]) < 0.05, (cls, report.deviation[cls])


# ------------------------------------------------------------------ F-set membership


def test_fset_first_ten():
    want = [False, True, True, False, True, True, False, True, True, False]
    got = [fset_member_interval(b).member for b in range(1, 11)]
    assert got == want


def test_fset_interval_matches_direct_oracle():
    for b in range(1, 41):
        member, power = interval_misses_powers_of_2(b)
        rec = fset_member_interval(b)
        assert rec.member == member, b
        assert rec.witness == power, b


def test_fset_witness_is_the_power_inside():
    rec = fset_member_interval(1)
    assert rec.witness == 4                      # [4, 5] contains 2^2
    rec = fset_member_interval(4)
    assert rec.witness == 512                    # [500, 625] contains 2^9
    assert fset_member_interval(2).witness is None
    with pytest.raises(ValueError):
        fset_member_interval(0)


def test_fset_scan_matches_single_queries():
    records = fset_scan_interval(200)
    assert len(records) == 200
    for rec in records:
        assert rec == fset_member_interval(rec.b)
    with pytest.raises(ValueError):
        fset_scan_interval(0)


def test_fset_weyl_agrees_with_interval_below_5000():
    for b in range(1, 5001):
        assert fset_member_weyl(b) == fset_member_interval(b).member, b
    with pytest.raises(ValueError):
        fset_member_weyl(0)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=300_000))
def test_fset_weyl_agrees_with_interval_at_random_heights(b):
    assert fset_member_weyl(b) == fset_member_interval(b).member


def test_fset_count_anchors():
    assert fset_count(100) == (67, 0.67, BETA)
    count, ratio, beta = fset_count(1000)
    assert count == 678 and ratio == pytest.approx(0.678)
    assert beta == BETA
    with pytest.raises(ValueError):
        fset_count(0)


def test_fset_count_tracks_beta():
    count, ratio, beta = fset_count(20_000)
    assert abs(ratio - beta) < 0.01
