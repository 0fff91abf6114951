"""Exact arithmetic on the extended rationals and Stern-Brocot combinatorics.

Fractions are always kept in lowest terms with non-negative denominator.
The single point at infinity is represented as 1/0 (and -1/0 normalizes to
it).  All the mediant / parent / boundary-sequence machinery that drives the
recursive polynomial computations lives here.
"""

from __future__ import annotations

import math
from typing import NamedTuple


class NotAFareyPair(ValueError):
    """Raised when a mediant is requested for fractions that are not Farey neighbors."""


class DenominatorTooSmall(ValueError):
    """Raised when an operation needs a fraction with denominator >= 2."""


class Fraction:
    """Reduced rational p/q with q >= 0; (1, 0) is the point at infinity."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if den == 0:
            if num == 0:
                raise ValueError("0/0 is not a fraction")
            num, den = 1, 0
        else:
            if den < 0:
                num, den = -num, -den
            g = math.gcd(num, den)
            num, den = num // g, den // g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Fraction is immutable")

    @classmethod
    def _raw(cls, num: int, den: int) -> "Fraction":
        """Build without reducing; caller guarantees gcd(|num|, den) = 1, den >= 0."""
        self = object.__new__(cls)
        object.__setattr__(self, "num", 1 if den == 0 else num)
        object.__setattr__(self, "den", den)
        return self

    @classmethod
    def parse(cls, text: str) -> "Fraction":
        s = text.strip()
        if "/" in s:
            a, b = s.split("/", 1)
            return cls(int(a), int(b))
        return cls(int(s))

    @property
    def is_infinity(self) -> bool:
        return self.den == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Fraction({self.num}, {self.den})"

    def __hash__(self):
        return hash((self.num, self.den))

    def __eq__(self, other):
        return (isinstance(other, Fraction)
                and self.num == other.num and self.den == other.den)

    def __lt__(self, other):
        return self.num * other.den < other.num * self.den

    def __le__(self, other):
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other):
        return other < self

    def __ge__(self, other):
        return other <= self

    def __float__(self) -> float:
        if self.den == 0:
            return math.inf
        return self.num / self.den


INFINITY = Fraction._raw(1, 0)
ZERO = Fraction._raw(0, 1)
ONE = Fraction._raw(1, 1)


class FareyPair(NamedTuple):
    left: Fraction
    right: Fraction


class Decomposition(NamedTuple):
    """Writes a target as gamma + gamma + beta (Farey sums), all of smaller denominator."""
    gamma: Fraction
    beta: Fraction


def reduce(num: int, den: int) -> Fraction:
    """Lowest-terms fraction for an arbitrary integer pair (rejects 0/0)."""
    return Fraction(num, den)


def farey_determinant(a: Fraction, b: Fraction) -> int:
    return a.num * b.den - b.num * a.den


def is_farey_pair(a: Fraction, b: Fraction) -> bool:
    return abs(farey_determinant(a, b)) == 1


def farey_sum(a: Fraction, b: Fraction) -> Fraction:
    """Mediant of a Farey pair; the result is automatically in lowest terms."""
    if not is_farey_pair(a, b):
        raise NotAFareyPair(f"{a} and {b} are not a Farey pair")
    return Fraction._raw(a.num + b.num, a.den + b.den)


def parents(alpha: Fraction) -> tuple[Fraction, Fraction]:
    """The two Farey neighbors (a/b, c/d) with a/b < alpha < c/d and b + d = den(alpha).

    Solved with a modular inverse of the numerator, so a query costs O(log q)
    instead of a Stern-Brocot tree descent.
    """
    p, q = alpha.num, alpha.den
    if q < 2:
        raise DenominatorTooSmall(f"{alpha} has no parent pair")
    d = (-pow(p, -1, q)) % q  # right parent denominator: d*p = -1 (mod q)
    c = (1 + d * p) // q
    left = Fraction._raw(p - c, q - d)
    right = Fraction._raw(c, d)
    return left, right


def decompose(alpha: Fraction) -> Decomposition:
    """Express alpha as gamma + gamma + beta with all denominators below den(alpha).

    For half-integers the parents are both integers, so the closed form
    gamma = (p-1)/2, beta = infinity is used.  Otherwise gamma is the parent
    of smaller denominator and beta is the other parent of the remaining one.
    """
    p, q = alpha.num, alpha.den
    if q < 2:
        raise DenominatorTooSmall(f"{alpha} does not decompose")
    if q == 2:
        return Decomposition(Fraction._raw((p - 1) // 2, 1), INFINITY)
    u, v = parents(alpha)
    if u.den > v.den:
        u, v = v, u
    bn, bd = v.num - u.num, v.den - u.den
    if bd < 0 or (bd == 0 and bn < 0):
        bn, bd = -bn, -bd
    return Decomposition(u, Fraction._raw(bn, bd) if bd else INFINITY)


def boundary_sequence(alpha: Fraction, sign: int, count: int) -> list[Fraction]:
    """First `count` terms of the positive or negative vertex sequence of alpha.

    The generic rule is corner, corner + alpha, corner + 2*alpha, ... in the
    mediant sense; integers and infinity follow their explicit exceptional
    lists (infinity's positive side is 0, 1, 2, ..., an integer n starts
    1/0, n+1, (2n+1)/2, ...).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    p, q = alpha.num, alpha.den
    if q == 0:
        return [Fraction._raw(sign * j, 1) for j in range(count)]
    if q == 1:
        out = [INFINITY]
        out.extend(Fraction(j * p + sign, j) for j in range(1, count))
        return out[:count]
    lo, hi = parents(alpha)
    corner = hi if sign == 1 else lo
    return [Fraction._raw(j * p + corner.num, j * q + corner.den) for j in range(count)]


def enumerate_range(max_den: int, lo: Fraction, hi: Fraction) -> list[Fraction]:
    """All reduced fractions in [lo, hi] with denominator strictly below max_den, ascending."""
    if max_den < 1:
        raise ValueError("max_den must be >= 1")
    if lo.is_infinity or hi.is_infinity:
        raise ValueError("enumeration endpoints must be finite")
    if hi < lo:
        raise ValueError("need lo <= hi")
    out = []
    for q in range(1, max_den):
        # p/q >= lo  <=>  p >= lo.num * q / lo.den
        p_min = -((-lo.num * q) // lo.den)
        p_max = (hi.num * q) // hi.den
        for p in range(p_min, p_max + 1):
            if math.gcd(p, q) == 1:
                out.append(Fraction._raw(p, q))
    out.sort()
    return out
