"""Words of a given slope and numeric 2x2 representation checks.

The word of slope alpha over the letters a, B is multiplicative over Farey
sums (seeds: slope 0 is "a", slope infinity is "B", with 0/1 < 1/0).  Slopes
outside [0, 1] reduce to it: reciprocals swap a's and B's, negatives turn
B's into b's, and both rules compose for slopes below -1.

The numeric side builds the explicit matrices attached to a parameter pair
(x, z, t) with x^2 + z^2 + (t - 1/t)^2 = 0 and compares traces of word
images against evaluated trace polynomials - the everything-to-everything
consistency check between the symbolic and matrix pictures.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .farey import Fraction, parents
from .poly import squarefree_decomposition
from .engine import riley_poly, trace_poly

_SWAP_AB = str.maketrans("aB", "Ba")

_omega_memo: dict[Fraction, str] = {
    Fraction(0): "a",
    Fraction(1, 0): "B",
    Fraction(1): "aB",
}


def omega(alpha: Fraction) -> str:
    """Word of slope alpha; length is numerator + denominator on [0, 1]."""
    word = _omega_memo.get(alpha)
    if word is not None:
        return word
    p, q = alpha.num, alpha.den
    if 0 <= p <= q or q == 0:
        lo, hi = parents(alpha)
        word = omega(lo) + omega(hi)
    elif p > 0:
        word = omega(Fraction(q, p)).translate(_SWAP_AB)
    else:
        word = omega(Fraction(-p, q)).replace("B", "b")
    _omega_memo[alpha] = word
    return word


def free_reduce(word: str) -> str:
    """Cancel adjacent inverse letters until the word is freely reduced."""
    out: list[str] = []
    for ch in word:
        if out and out[-1] != ch and out[-1].lower() == ch.lower():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


@dataclass(frozen=True)
class ParameterPair:
    """(x, z, t) with x^2 + z^2 + (t - 1/t)^2 = 0 (up to numeric residual)."""
    x: complex
    z: complex
    t: complex

    @property
    def markov_residual(self) -> float:
        d = self.t - 1 / self.t
        return abs(self.x * self.x + self.z * self.z + d * d)


def solve_t(x0: complex, z0: complex) -> complex:
    """A deterministic t with x0^2 + z0^2 + (t - 1/t)^2 = 0.

    Branch: s is the square root of -(x0^2 + z0^2) with non-negative real
    part (ties broken toward non-negative imaginary part), and t solves
    t - 1/t = s via the principal root of the quadratic.
    """
    s = cmath.sqrt(-(x0 * x0 + z0 * z0))
    if s.real < 0 or (s.real == 0 and s.imag < 0):
        s = -s
    return (s + cmath.sqrt(s * s + 4)) / 2


def parameter_pair(x0: complex, z0: complex) -> ParameterPair:
    return ParameterPair(complex(x0), complex(z0), solve_t(x0, z0))


def rep_from_params(pp: ParameterPair, tol: float = 1e-6):
    """Images of the three order-two generators as 2x2 complex matrices.

    Which of the three matrix shapes applies depends on the vanishing of x
    and z; in every case the determinants are 1 and the traces of the
    derived letters come out as |x|, 0, and |z| up to sign.
    """
    if pp.markov_residual > tol:
        raise ValueError(f"parameter pair residual {pp.markov_residual:.3e} too large")
    x, z, t = pp.x, pp.z, pp.t
    if x == 0:
        p = np.array([[0, 1], [-1, 0]], dtype=complex)
        q = np.array([[1j, 0], [0, -1j]], dtype=complex)
        r = np.array([[0, 1j * t], [1j / t, 0]], dtype=complex)
    elif z == 0:
        p = np.array([[1j, 0], [0, -1j]], dtype=complex)
        q = np.array([[0, 1], [-1, 0]], dtype=complex)
        r = np.array([[0, 1j * t], [1j / t, 0]], dtype=complex)
    else:
        ti = 1 / t
        p = np.array([[ti - t, -1], [-z * z, t - ti]], dtype=complex) / x
        q = np.array([[0, 1], [-z * z, 0]], dtype=complex) / z
        r = np.array([[-z * ti, z + t * t / z - 1 / z],
                      [z * (1 - ti * ti), z * ti]], dtype=complex) / x
    return p, q, r


def letter_images(pp: ParameterPair):
    """Matrices for the letters a = rq and B = (qp)^-1 plus their inverses."""
    p, q, r = rep_from_params(pp)
    a = r @ q
    b = q @ p
    return {"a": a, "A": _inv2(a), "b": b, "B": _inv2(b)}


def _inv2(m):
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex) / det


def word_image(word: str, images: dict) -> np.ndarray:
    """Left-to-right product of letter images; inverses are derived if missing."""
    gens = dict(images)
    for ch in set(word):
        if ch not in gens:
            other = ch.swapcase()
            if other not in gens:
                raise ValueError(f"no image for letter {ch!r}")
            gens[ch] = _inv2(gens[other])
    out = np.eye(2, dtype=complex)
    for ch in word:
        out = out @ gens[ch]
    return out


def trace_check(alpha: Fraction, x0: complex, z0: complex, tol: float) -> bool:
    """Does the numeric word trace match the evaluated trace polynomial?

    Comparison is on absolute values: the matrices live in PSL2, so each
    trace is only defined up to sign.
    """
    pp = parameter_pair(x0, z0)
    m = word_image(omega(alpha), letter_images(pp))
    symbolic = trace_poly(alpha).eval_complex({"x": x0, "z": z0})
    return abs(abs(m[0, 0] + m[1, 1]) - abs(symbolic)) < tol


def prep_matrices(x0_sq: complex):
    """The two parabolic generators of a parabolic representation at X0."""
    k0 = np.array([[1, 1], [0, 1]], dtype=complex)
    k1 = np.array([[1, 0], [-x0_sq, 1]], dtype=complex)
    return k0, k1


class RootFindingError(RuntimeError):
    pass


def riley_roots(alpha: Fraction, tol: float = 1e-8) -> list[tuple[complex, int]]:
    """(root, multiplicity) pairs of the Riley polynomial at alpha.

    Roots come from companion-matrix eigenvalues of each square-free factor;
    multiplicities come from the exact square-free decomposition, never from
    clustering nearby numeric roots.  Roots whose scaled residual exceeds
    tol are reported as failures.
    """
    lam = riley_poly(alpha)
    if lam.is_zero or lam.is_constant():
        raise ValueError(f"Riley polynomial at {alpha} is constant")
    out: list[tuple[complex, int]] = []
    failures = []
    for factor, mult in squarefree_decomposition(lam):
        deg = factor.degree_in("X")
        coeffs = [factor.terms.get((k,), 0) for k in range(deg, -1, -1)]
        for root in np.roots([float(c) for c in coeffs]):
            root = complex(root)
            scale = sum(abs(c) * max(1.0, abs(root)) ** (deg - i)
                        for i, c in enumerate(coeffs))
            residual = abs(factor.eval_complex({"X": root}))
            if residual > tol * scale:
                failures.append((root, residual))
            out.append((root, mult))
    if failures:
        raise RootFindingError(f"roots failed the residual check at {alpha}: {failures}")
    out.sort(key=lambda rm: (rm[0].real, rm[0].imag))
    return out


def verify_prep(alpha: Fraction, x0_sq: complex, tol: float) -> bool:
    """Numeric witness that a Riley root yields a parabolic representation.

    Checks that X0 is a root of the Riley polynomial within tol, that with
    x = sqrt(X0) and z = i x the word of slope alpha has trace ~ 0 (so its
    square maps to the identity in PSL2), and that the parabolic pair has
    trace of k0 k1 exactly 2 - X0.
    """
    lam = riley_poly(alpha)
    scale = max(1.0, max(abs(c) for c in lam.terms.values()) if lam.terms else 1.0)
    scale *= max(1.0, abs(x0_sq)) ** (lam.degree_in("X") if not lam.is_constant() else 0)
    if abs(lam.eval_complex({"X": x0_sq})) > tol * scale:
        return False
    x0 = cmath.sqrt(x0_sq)
    z0 = 1j * x0
    pp = parameter_pair(x0, z0)
    m = word_image(omega(alpha), letter_images(pp))
    if abs(m[0, 0] + m[1, 1]) >= tol:
        return False
    k0, k1 = prep_matrices(x0_sq)
    prod = k0 @ k1
    # algebraically the trace is 2 - X0 on the nose; allow rounding ulps only
    return bool(abs(prod[0, 0] + prod[1, 1] - (2 - x0_sq)) <= 1e-12 * (1 + abs(x0_sq)))
