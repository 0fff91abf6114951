"""Mobius action of the extended modular group and the divisibility predicate.

Integer 2x2 matrices of determinant +-1 act projectively on the extended
rationals, preserving Farey pairs.  For a slope alpha, the subgroup generated
by the stabilizer reflections at infinity and their conjugates fixing alpha
carries factors of the trace polynomial at alpha into trace polynomials at
every orbit point; `orbit_sample` explores that (infinite) orbit breadth
first up to a word-length bound and `check_factor_divides` performs the
exact polynomial division the statement predicts.
"""

from __future__ import annotations

from typing import Optional

from .farey import Fraction
from .poly import Poly
from .engine import char_poly, trace_poly


class MobiusMap:
    """Integer matrix [[a, b], [c, d]] with ad - bc = +-1, up to global sign."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int, c: int, d: int):
        if a * d - b * c not in (1, -1):
            raise ValueError("determinant must be +1 or -1")
        # canonical sign: first nonzero entry of the bottom row positive
        if c < 0 or (c == 0 and d < 0):
            a, b, c, d = -a, -b, -c, -d
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("MobiusMap is immutable")

    @property
    def determinant(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        return MobiusMap(self.a * other.a + self.b * other.c,
                         self.a * other.b + self.b * other.d,
                         self.c * other.a + self.d * other.c,
                         self.c * other.b + self.d * other.d)

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def __eq__(self, other):
        return (isinstance(other, MobiusMap)
                and (self.a, self.b, self.c, self.d)
                == (other.a, other.b, other.c, other.d))

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"MobiusMap({self.a}, {self.b}, {self.c}, {self.d})"

    def apply(self, alpha: Fraction) -> Fraction:
        """Projective action: p/q maps to (a p + b q)/(c p + d q)."""
        p, q = alpha.num, alpha.den
        return Fraction(self.a * p + self.b * q, self.c * p + self.d * q)


# reflection at 0, reflection at 1 (together: the sign-preserving stabilizer
# of infinity), and the two standard symmetries of the Farey diagram
PHI_1 = MobiusMap(-1, 0, 0, 1)
PHI_2 = MobiusMap(-1, 2, 0, 1)
SIGMA = MobiusMap(-1, 1, 0, 1)
ZETA = MobiusMap(0, 1, -1, 1)


def apply(m: MobiusMap, alpha: Fraction) -> Fraction:
    return m.apply(alpha)


def send_to_infinity(alpha: Fraction) -> MobiusMap:
    """Some determinant +-1 integer map taking alpha to 1/0.

    The bottom row (q, -p) kills alpha; the top row completes it via the
    extended Euclidean identity a p + b q = 1.
    """
    p, q = alpha.num, alpha.den
    if q == 0:
        return MobiusMap(1, 0, 0, 1)
    g, a, b = _ext_gcd(p, q)
    assert g == 1, "fractions are stored in lowest terms"
    return MobiusMap(a, b, q, -p)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def stabilizer_generators(alpha: Fraction) -> list[MobiusMap]:
    """Involutions generating the orbit group for alpha: the two reflections
    fixing infinity plus their conjugates fixing alpha."""
    psi = send_to_infinity(alpha)
    psi_inv = psi.inverse()
    return [PHI_1, PHI_2, psi_inv @ PHI_1 @ psi, psi_inv @ PHI_2 @ psi]


def orbit_sample(alpha: Fraction, max_den: int, max_word: int) -> set[Fraction]:
    """Orbit points of {alpha, infinity} under generator words of bounded length.

    The group is infinite, so this is a sample: breadth-first application of
    the four generating involutions, `max_word` layers deep, then filtered
    to finite fractions with denominator at most max_den.
    """
    gens = stabilizer_generators(alpha)
    seen = {alpha, Fraction(1, 0)}
    frontier = list(seen)
    for _ in range(max_word):
        fresh = []
        for point in frontier:
            for g in gens:
                img = g.apply(point)
                if img not in seen:
                    seen.add(img)
                    fresh.append(img)
        if not fresh:
            break
        frontier = fresh
    return {f for f in seen if not f.is_infinity and f.den <= max_den}


def divides_quotient(alpha: Fraction, alpha_prime: Fraction,
                     kind: str = "T") -> Optional[Poly]:
    """Quotient of the alpha' polynomial by the alpha one, or None.

    kind selects the trace polynomials ("T") or the character polynomials
    ("T0"); division is exact over the integers either way.
    """
    if kind == "T":
        return trace_poly(alpha_prime).exact_divide(trace_poly(alpha))
    if kind == "T0":
        return char_poly(alpha_prime).exact_divide(char_poly(alpha))
    raise ValueError(f"unknown kind {kind!r}")


def check_factor_divides(alpha: Fraction, alpha_prime: Fraction) -> bool:
    """Does the trace polynomial at alpha divide the one at alpha_prime?"""
    return divides_quotient(alpha, alpha_prime, "T") is not None
