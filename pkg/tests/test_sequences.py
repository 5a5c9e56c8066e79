"""Sequence providers, checked against the raw recurrence as the oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from discrim.sequences import (
    DEFAULT_EXACT_CAP,
    CapExceeded,
    SequenceSpec,
    distinct_prefix_length,
    linear_recurrence,
    parse_spec,
    polynomial,
    residue_iter,
    salajan,
    salajan_term_exact,
    salajan_term_mod,
    stream_residues,
    term_exact,
)


def recurrence_oracle(count):
    """First `count` terms straight from u_n = 2u_{n-1} + 3u_{n-2}, u1=2, u2=1."""
    terms = [2, 1]
    while len(terms) < count:
        terms.append(2 * terms[-1] + 3 * terms[-2])
    return terms[:count]


ORACLE_400 = recurrence_oracle(400)


# ------------------------------------------------------------------ terms


def test_first_terms_match_recurrence():
    assert ORACLE_400[:9] == [2, 1, 8, 19, 62, 181, 548, 1639, 4922]
    for j in range(1, 401):
        assert salajan_term_exact(j) == ORACLE_400[j - 1]


def test_closed_form_identity():
    # u_j = (3^j - 5(-1)^j) / 4 with an exactly divisible numerator
    for j in range(1, 200):
        num = 3**j - 5 * (-1) ** j
        assert num % 4 == 0
        assert salajan_term_exact(j) == num // 4


def test_term_exact_generic_kinds():
    fib_like = linear_recurrence(1, 1, 1, 2)
    expected = [1, 2, 3, 5, 8, 13, 21, 34]
    assert [term_exact(fib_like, j) for j in range(1, 9)] == expected

    quad = polynomial(1, 2, 3)   # 1 + 2j + 3j^2
    assert [term_exact(quad, j) for j in range(1, 5)] == [6, 17, 34, 57]
    assert term_exact(salajan(), 7) == 548


def test_term_caps():
    with pytest.raises(CapExceeded):
        salajan_term_exact(DEFAULT_EXACT_CAP + 1)
    with pytest.raises(CapExceeded):
        salajan_term_exact(2, cap=1)
    with pytest.raises(CapExceeded):
        term_exact(linear_recurrence(1, 1, 0, 1), 11, cap=10)
    # polynomials have no cap: evaluation is a single Horner pass
    assert term_exact(polynomial(0, 1), 10**6) == 10**6


def test_term_index_validation():
    with pytest.raises(ValueError):
        salajan_term_exact(0)
    with pytest.raises(ValueError):
        salajan_term_mod(0, 7)
    with pytest.raises(ValueError):
        salajan_term_mod(3, 0)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=1, max_value=399), st.integers(min_value=1, max_value=10**9))
def test_term_mod_matches_oracle(j, m):
    assert salajan_term_mod(j, m) == ORACLE_400[j - 1] % m


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=1, max_value=10**6))
def test_term_mod_large_index_consistency(j, m):
    # O(log j) path against the doubling identity u_{j} mod m recomputed mod 4m
    four_m = 4 * m
    sign = -1 if j % 2 else 1
    t = (pow(3, j, four_m) - 5 * sign) % four_m
    assert salajan_term_mod(j, m) == (t >> 2) % m
    assert 0 <= salajan_term_mod(j, m) < m


# ------------------------------------------------------------------ spec objects


def test_parse_spec_round_trips():
    for text in ("salajan", "linrec:2,3,2,1", "linrec:-1,4,0,7", "poly:1,2,3", "poly:5"):
        spec = parse_spec(text)
        assert parse_spec(spec.text()) == spec
    assert parse_spec(" salajan ") == salajan()


@pytest.mark.parametrize(
    "bad",
    ["", "fib", "linrec:1,2,3", "linrec:1,2,3,4,5", "linrec:a,b,c,d", "poly:", "weird:1,2"],
)
def test_parse_spec_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_spec(bad)


def test_spec_validation():
    with pytest.raises(ValueError):
        SequenceSpec("salajan", coeffs=(1,))
    with pytest.raises(ValueError):
        SequenceSpec("linear_recurrence", coeffs=(1, 2), initial=(1,))
    with pytest.raises(ValueError):
        SequenceSpec("polynomial", coeffs=())
    with pytest.raises(ValueError):
        SequenceSpec("mystery")
    assert salajan().as_recurrence() == (2, 3, 2, 1)
    with pytest.raises(ValueError):
        polynomial(1, 1).as_recurrence()


# ------------------------------------------------------------------ residue streams


def test_stream_residues_matches_exact_terms():
    for spec in (salajan(), linear_recurrence(1, 1, 1, 2), polynomial(3, 0, 1)):
        for m in (1, 2, 7, 100):
            got = stream_residues(spec, m, 30)
            want = [term_exact(spec, j) % m for j in range(1, 31)]
            assert got == want, (spec.text(), m)


def test_residue_iter_is_lazy_and_unbounded():
    it = residue_iter(salajan(), 97)
    first = [next(it) for _ in range(5)]
    assert first == [2, 1, 8, 19, 62]
    with pytest.raises(ValueError):
        residue_iter(salajan(), 0).__next__()
    with pytest.raises(ValueError):
        stream_residues(salajan(), 7, 0)


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=1, max_value=50),
)
def test_stream_residues_generic_recurrences(c1, c2, v1, v2, m):
    spec = linear_recurrence(c1, c2, v1, v2)
    got = stream_residues(spec, m, 12)
    want = [term_exact(spec, j) % m for j in range(1, 13)]
    assert got == want


# ------------------------------------------------------------------ distinct prefixes


def test_distinct_prefix_length_anchors():
    seq = salajan()
    # u_3 = 8 = 1 = u_2 (mod 7), so only the first two terms stay distinct
    assert distinct_prefix_length(seq, 7, 10) == 2
    assert distinct_prefix_length(seq, 1, 10) == 1
    assert distinct_prefix_length(seq, 29, 29) == 14
    # limit wins when it is smaller than the index of the first repeat
    assert distinct_prefix_length(seq, 29, 5) == 5
    assert distinct_prefix_length(seq, 7, 1) == 1
    # squares mod 5 repeat at j = 3 (1, 4, 9=4)
    assert distinct_prefix_length(polynomial(0, 0, 1), 5, 10) == 2


def test_distinct_prefix_length_validation():
    with pytest.raises(ValueError):
        distinct_prefix_length(salajan(), 0, 5)
    with pytest.raises(ValueError):
        distinct_prefix_length(salajan(), 5, 0)


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=1, max_value=400), st.integers(min_value=1, max_value=40))
def test_distinct_prefix_length_matches_pairwise_oracle(m, limit):
    seq = salajan()
    residues = [t % m for t in recurrence_oracle(limit)]
    expected = limit
    seen = set()
    for idx, r in enumerate(residues):
        if r in seen:
            expected = idx
            break
        seen.add(r)
    assert distinct_prefix_length(seq, m, limit) == expected
