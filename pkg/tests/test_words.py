import math
import random

import numpy as np
import pytest

from fareyrec.farey import Fraction, INFINITY, ZERO, ONE, enumerate_range
from fareyrec.engine import trace_poly
from fareyrec.words import (ParameterPair, free_reduce,
                            letter_images, omega, parameter_pair, prep_matrices,
                            rep_from_params, riley_roots, solve_t, trace_check,
                            verify_prep, word_image)

F = Fraction


# -- words -----------------------------------------------------------------------

def test_omega_seeds_and_small_slopes():
    assert omega(ZERO) == "a"
    assert omega(INFINITY) == "B"
    assert omega(ONE) == "aB"
    assert omega(F(1, 2)) == "aaB"


def test_omega_multiplicative_over_farey_pairs():
    # exhaustive over every Farey pair of finite fractions in [0, 1] with
    # denominators <= 30 (mediants then stay inside [0, 1])
    from fareyrec.farey import farey_sum, is_farey_pair
    fractions = enumerate_range(31, ZERO, ONE)
    pairs = 0
    for i, a in enumerate(fractions):
        for b in fractions[i + 1:]:
            if not is_farey_pair(a, b):
                continue
            assert omega(farey_sum(a, b)) == omega(a) + omega(b)
            pairs += 1
    assert pairs == 555  # all Farey pairs with both denominators <= 30
    # the seed pair, with the slope-0 word on the left of the infinite one
    assert omega(ONE) == omega(ZERO) + omega(INFINITY)


def test_omega_reciprocal_words_are_cyclic_rotations():
    # beyond [0, 1] the extension rules give conjugates: the word at 2 from
    # the pair {1, 1/0} is a rotation of the concatenation, not equal to it
    w = omega(F(2))
    cat = omega(ONE) + omega(INFINITY)
    assert w != cat
    assert w in cat + cat and len(w) == len(cat)


def test_omega_length_is_numerator_plus_denominator():
    for alpha in enumerate_range(26, ZERO, ONE):
        assert len(omega(alpha)) == alpha.num + alpha.den


def test_omega_outside_unit_interval():
    assert omega(F(2)) == omega(F(1, 2)).translate(str.maketrans("aB", "Ba"))
    assert omega(F(-1, 2)) == omega(F(1, 2)).replace("B", "b")
    assert omega(F(-3, 2)) == omega(F(3, 2)).replace("B", "b")


def test_free_reduce():
    assert free_reduce("aA") == ""
    assert free_reduce("aBbA") == ""
    assert free_reduce("aaBB") == "aaBB"
    assert free_reduce("abBA a".replace(" ", "")) == "a"


# -- parameter pairs -----------------------------------------------------------------

def test_solve_t_degenerate_cases():
    assert solve_t(0, 0) == 1
    assert abs(solve_t(2, 2j) - 1) < 1e-12


def test_solve_t_satisfies_markov():
    rng = random.Random(3)
    for _ in range(50):
        x0 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        z0 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        pp = parameter_pair(x0, z0)
        assert pp.t != 0
        assert pp.markov_residual < 1e-12
    assert parameter_pair(2, 0).markov_residual < 1e-12


def test_rep_rejects_bad_parameter_pair():
    with pytest.raises(ValueError):
        rep_from_params(ParameterPair(1.0, 1.0, 5.0))


def test_rep_x_zero_case_matches_published_matrices():
    pp = parameter_pair(0, 1.5)
    p, q, r = rep_from_params(pp)
    assert np.allclose(q, np.diag([1j, -1j]))
    assert np.allclose(p, np.array([[0, 1], [-1, 0]]))
    assert np.allclose(r @ r, -np.eye(2))  # order two in PSL2


def test_rep_determinants_and_traces():
    rng = random.Random(4)
    for _ in range(20):
        x0 = complex(rng.uniform(0.2, 1.2), rng.uniform(-1, 1))
        z0 = complex(rng.uniform(0.2, 1.2), rng.uniform(-1, 1))
        pp = parameter_pair(x0, z0)
        p, q, r = rep_from_params(pp)
        for m in (p, q, r):
            assert abs(np.linalg.det(m) - 1) < 1e-10
        a = r @ q
        b = q @ p
        assert abs(abs(np.trace(a)) - abs(x0)) < 1e-9
        assert abs(np.trace(b)) < 1e-9
        ab_inv = a @ np.linalg.inv(b)
        assert abs(abs(np.trace(ab_inv)) - abs(z0)) < 1e-9


# -- word images ----------------------------------------------------------------------

def test_word_image_empty_word_is_identity():
    assert np.allclose(word_image("", {}), np.eye(2))


def test_word_image_hand_multiplied_example():
    images = {"a": np.array([[1, 1], [0, 1]], dtype=complex),
              "B": np.array([[1, 0], [1, 1]], dtype=complex)}
    assert np.allclose(word_image("aB", images), np.array([[2, 1], [1, 1]]))


def test_word_image_cancels_inverses():
    images = {"a": np.array([[2, 1], [3, 2]], dtype=complex)}
    assert np.allclose(word_image("aA", images), np.eye(2))


def test_word_image_requires_some_image():
    with pytest.raises(ValueError):
        word_image("c", {"a": np.eye(2)})


# -- the trace oracle -------------------------------------------------------------------

def test_trace_check_symbolic_example():
    # at (x, z) = (2, 1) the slope-1/3 trace value is z(x^2 - 1) = 3
    assert trace_poly(F(1, 3)).eval_complex({"x": 2, "z": 1}) == 3
    assert trace_check(F(1, 3), 2, 1, 1e-8)


def test_trace_check_slope_zero_and_infinity():
    rng = random.Random(8)
    for _ in range(10):
        x0 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        z0 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        pp = parameter_pair(x0, z0)
        images = letter_images(pp)
        m = word_image(omega(ZERO), images)
        assert abs(abs(np.trace(m)) - abs(x0)) < 1e-9
        m = word_image(omega(INFINITY), images)
        assert abs(np.trace(m)) < 1e-9  # B inverts b, which has trace zero


def test_trace_check_across_extension_rules():
    rng = random.Random(12)
    for alpha in (F(5, 3), F(-2, 5), F(-7, 4), F(3), F(-2)):
        for _ in range(5):
            x0 = complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8))
            z0 = complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8))
            assert trace_check(alpha, x0, z0, 1e-8)


def test_trace_check_on_degenerate_parameter_axes():
    # exact zeros route through the special matrix shapes
    assert trace_check(F(1, 3), 0, 1.25, 1e-8)
    assert trace_check(F(1, 3), 1.25, 0, 1e-8)
    assert trace_check(F(2, 5), 0, 0.5j, 1e-8)


# -- parabolic representations -------------------------------------------------------------

@pytest.mark.parametrize("x0_sq,expected_trace", [
    (0, 2),
    (1, 1),
    (2 + 1j, -1j),
])
def test_prep_matrices_product_trace(x0_sq, expected_trace):
    k0, k1 = prep_matrices(x0_sq)
    assert np.allclose(np.trace(k0 @ k1), expected_trace)
    assert np.allclose(np.trace(k0), 2)
    assert np.allclose(np.trace(k1), 2)


def test_riley_roots_examples():
    roots = riley_roots(F(1, 3))
    assert len(roots) == 1 and abs(roots[0][0] - 1) < 1e-12

    roots = riley_roots(F(1, 4))
    assert len(roots) == 1 and abs(roots[0][0] - 2) < 1e-12

    roots = sorted((r for r, _ in riley_roots(F(1, 5))), key=lambda z: z.real)
    golden = [(3 - math.sqrt(5)) / 2, (3 + math.sqrt(5)) / 2]
    assert all(abs(r - g) < 1e-9 for r, g in zip(roots, golden))


def test_riley_roots_report_multiplicity_from_squarefree_analysis():
    # the slope-3/8 Riley polynomial is -(X^2 - 2X + 2) X
    roots = riley_roots(F(3, 8))
    mults = {complex(round(r.real, 6), round(r.imag, 6)): m for r, m in roots}
    assert mults[complex(0, 0)] == 1
    assert len(roots) == 3


def test_riley_roots_rejects_constant():
    with pytest.raises(ValueError):
        riley_roots(F(1, 2))


@pytest.mark.parametrize("alpha,x0_sq,expected", [
    ((1, 3), 1, True),
    ((1, 4), 2, True),
    ((1, 3), 5, False),
])
def test_verify_prep_examples(alpha, x0_sq, expected):
    assert verify_prep(F(*alpha), x0_sq, 1e-8) is expected


def test_verify_prep_on_all_roots_of_sample_slopes():
    for alpha in (F(1, 3), F(2, 5), F(3, 7)):
        for root, _mult in riley_roots(alpha):
            assert verify_prep(alpha, root, 1e-8)
