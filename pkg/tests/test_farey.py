import math

import pytest

from fareyrec.farey import (Fraction, INFINITY, ZERO, ONE, NotAFareyPair,
                            DenominatorTooSmall, reduce, farey_sum,
                            is_farey_pair, parents, decompose,
                            boundary_sequence, enumerate_range)


def brute_force_parents(alpha):
    """Oracle: scan all smaller-denominator fractions for the parent pair."""
    q = alpha.den
    hits = []
    for b in range(1, q):
        for a in range(-2 * q, 2 * q + 1):
            if math.gcd(abs(a), b) != 1:
                continue
            cand = Fraction(a, b)
            if is_farey_pair(cand, alpha) and cand.den + 0 < q:
                hits.append(cand)
    below = max(h for h in hits if h < alpha)
    above = min(h for h in hits if h > alpha)
    # the parent pair is the unique one whose denominators sum to q
    assert below.den + above.den == q
    return below, above


# -- reduce -------------------------------------------------------------------

def test_reduce_cancels_gcd():
    assert reduce(4, 6) == Fraction(2, 3)


def test_reduce_normalizes_infinity():
    assert reduce(-1, 0) == INFINITY
    assert reduce(7, 0) == INFINITY


def test_reduce_negative_denominator():
    assert reduce(0, -1) == ZERO
    assert reduce(3, -6) == Fraction(-1, 2)


def test_reduce_rejects_zero_over_zero():
    with pytest.raises(ValueError):
        reduce(0, 0)


def test_parse_and_str_round_trip():
    for text in ["2/7", "-3/5", "1/0", "0/1", "5/1"]:
        assert str(Fraction.parse(text)) == text
    assert Fraction.parse("3") == Fraction(3, 1)
    assert Fraction.parse("-2") == Fraction(-2, 1)


def test_order_extends_reals_and_infinity_is_top():
    assert Fraction(1, 3) < Fraction(2, 5)
    assert Fraction(-1, 2) < ZERO
    assert ZERO < INFINITY
    assert ONE < INFINITY


# -- farey pairs and mediants ---------------------------------------------------

@pytest.mark.parametrize("a,b,expected", [
    ((1, 3), (1, 4), True),
    ((1, 3), (1, 5), False),
    ((0, 1), (1, 0), True),
])
def test_is_farey_pair(a, b, expected):
    assert is_farey_pair(Fraction(*a), Fraction(*b)) is expected


@pytest.mark.parametrize("a,b,expected", [
    ((1, 3), (1, 4), (2, 7)),
    ((0, 1), (1, 0), (1, 1)),
    ((2, 5), (3, 7), (5, 12)),
])
def test_farey_sum(a, b, expected):
    assert farey_sum(Fraction(*a), Fraction(*b)) == Fraction(*expected)


def test_farey_sum_refuses_non_pairs():
    with pytest.raises(NotAFareyPair):
        farey_sum(Fraction(1, 3), Fraction(1, 5))


def test_mediant_of_farey_pair_is_reduced():
    # the raw mediant of a Farey pair is always already in lowest terms
    for q in range(2, 40):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            lo, hi = parents(Fraction(p, q))
            assert math.gcd(abs(lo.num + hi.num), lo.den + hi.den) == 1


# -- parents ---------------------------------------------------------------------

@pytest.mark.parametrize("alpha,expected", [
    ((2, 7), ((1, 4), (1, 3))),   # solves 2b = 1 mod 7
    ((1, 2), ((0, 1), (1, 1))),
    ((5, 12), ((2, 5), (3, 7))),  # brute-force scan confirms below
])
def test_parents_examples(alpha, expected):
    lo, hi = parents(Fraction(*alpha))
    assert (lo, hi) == (Fraction(*expected[0]), Fraction(*expected[1]))


def test_parents_against_brute_force_oracle():
    for q in range(2, 30):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            alpha = Fraction(p, q)
            assert parents(alpha) == brute_force_parents(alpha)


def test_parents_properties():
    for q in range(2, 60):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            alpha = Fraction(p, q)
            lo, hi = parents(alpha)
            assert lo < alpha < hi
            assert is_farey_pair(lo, alpha) and is_farey_pair(hi, alpha)
            assert lo.den + hi.den == q


def test_parents_requires_denominator_two():
    for alpha in (ZERO, ONE, INFINITY, Fraction(-3)):
        with pytest.raises(DenominatorTooSmall):
            parents(alpha)


# -- decompose --------------------------------------------------------------------

@pytest.mark.parametrize("alpha,gamma,beta", [
    ((2, 7), (1, 3), (0, 1)),
    ((1, 2), (0, 1), (1, 0)),
    ((5, 12), (2, 5), (1, 2)),
])
def test_decompose_examples(alpha, gamma, beta):
    d = decompose(Fraction(*alpha))
    assert d.gamma == Fraction(*gamma)
    assert d.beta == Fraction(*beta)


def test_decompose_reconstruction_exhaustive():
    # gamma + gamma + beta rebuilds alpha, through denominator 500
    for q in range(2, 501):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            alpha = Fraction(p, q)
            gamma, beta = decompose(alpha)
            assert is_farey_pair(gamma, beta)
            step = farey_sum(gamma, beta)
            assert farey_sum(gamma, step) == alpha
            assert gamma.den < q and beta.den < q and step.den < q


def test_decompose_negative_and_large_arguments():
    for alpha in (Fraction(-2, 7), Fraction(9, 7), Fraction(-13, 5),
                  Fraction(-3, 2), Fraction(7, 2)):
        gamma, beta = decompose(alpha)
        assert farey_sum(gamma, farey_sum(gamma, beta)) == alpha


# -- boundary sequences --------------------------------------------------------------

@pytest.mark.parametrize("alpha,sign,expected", [
    ((1, 0), +1, ["0/1", "1/1", "2/1", "3/1"]),
    ((0, 1), +1, ["1/0", "1/1", "1/2", "1/3"]),
    ((2, 7), +1, ["1/3", "3/10", "5/17"]),
    ((1, 0), -1, ["0/1", "-1/1", "-2/1"]),
    ((0, 1), -1, ["1/0", "-1/1", "-1/2"]),
])
def test_boundary_sequence_examples(alpha, sign, expected):
    got = boundary_sequence(Fraction(*alpha), sign, len(expected))
    assert [str(f) for f in got] == expected


def test_boundary_sequence_terms_are_farey_neighbors():
    for alpha in (Fraction(2, 7), Fraction(3, 8), Fraction(5, 12), Fraction(4)):
        for sign in (+1, -1):
            seq = boundary_sequence(alpha, sign, 8)
            for term in seq:
                assert is_farey_pair(term, alpha)
            for a, b in zip(seq, seq[1:]):
                assert is_farey_pair(a, b)


def test_boundary_sequence_validates_arguments():
    with pytest.raises(ValueError):
        boundary_sequence(ZERO, +1, 0)
    with pytest.raises(ValueError):
        boundary_sequence(ZERO, 2, 3)


# -- enumeration ------------------------------------------------------------------------

def test_enumerate_small_range():
    got = enumerate_range(6, ZERO, Fraction(1, 2))
    assert [str(f) for f in got] == ["0/1", "1/5", "1/4", "1/3", "2/5", "1/2"]


def test_enumerate_counts_against_brute_force():
    def brute(max_den):
        seen = set()
        for q in range(1, max_den):
            for p in range(0, q + 1):
                if 2 * p <= q and math.gcd(p, q) == 1:
                    seen.add((p, q))
        return len(seen)

    for max_den in (10, 50, 120):
        assert len(enumerate_range(max_den, ZERO, Fraction(1, 2))) == brute(max_den)


def test_enumerate_is_sorted_and_reduced():
    out = enumerate_range(40, Fraction(1, 3), Fraction(2, 3))
    assert out == sorted(out)
    assert len(out) == len(set(out))
    for f in out:
        assert math.gcd(abs(f.num), f.den) == 1
        assert Fraction(1, 3) <= f <= Fraction(2, 3)


def test_enumerate_validates_arguments():
    with pytest.raises(ValueError):
        enumerate_range(0, ZERO, ONE)
    with pytest.raises(ValueError):
        enumerate_range(5, ONE, ZERO)
    with pytest.raises(ValueError):
        enumerate_range(5, ZERO, INFINITY)
