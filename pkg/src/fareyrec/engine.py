"""Farey-recursive evaluation of the trace, character, and Riley polynomials.

A Farey recursive function is pinned down by its values at 0, 1/0, and 1;
every other value follows from F(g + g + b) = -F(b) + F(g) F(g + b) over
Farey pairs {g, b} (sums are mediants).  The trace polynomial uses seeds
(x, 0, z) in Z[x, z] and the generic function uses (x, y, z) in Z[x, y, z].

The character polynomial (trace divided by its parity monomial, rewritten in
X = x^2, Z = z^2) and the Riley polynomial (Z -> -X) are not themselves
Farey recursive, but satisfy the same recursion twisted by a monomial that
depends only on the parities of the third triangle vertex.  Computing them
directly in the small rings is what makes the large batch runs cheap.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .farey import Fraction, INFINITY, decompose, farey_sum, parents
from .poly import Poly, format_poly, parse_poly

VARS_XZ = ("x", "z")
VARS_XYZ = ("x", "y", "z")
VARS_BIG = ("X", "Z")
VARS_X = ("X",)
VARS_UV = ("u", "v")


@dataclass(frozen=True)
class FRFSpec:
    """Seed data of a Farey recursive function: values at 0, 1/0, and 1."""
    variables: tuple[str, ...]
    seed0: Poly
    seed_inf: Poly
    seed1: Poly

    def __post_init__(self):
        for seed in (self.seed0, self.seed_inf, self.seed1):
            if seed.vars != tuple(self.variables):
                raise ValueError("seeds must share the spec's variable set")


class MemoStore:
    """Memo table for one polynomial family, with an optional JSON-lines snapshot."""

    def __init__(self, kind: str, variables: tuple[str, ...]):
        self.kind = kind
        self.variables = tuple(variables)
        self.values: dict[Fraction, Poly] = {}

    def __contains__(self, alpha: Fraction) -> bool:
        return alpha in self.values

    def __len__(self) -> int:
        return len(self.values)

    def get(self, alpha: Fraction) -> Optional[Poly]:
        return self.values.get(alpha)

    def put(self, alpha: Fraction, value: Poly):
        self.values[alpha] = value

    def save(self, path: str):
        """Write one record per line, sorted for byte-stable output."""
        keys = sorted(self.values, key=lambda a: (a.den, a.num))
        with open(path, "w") as fh:
            for alpha in keys:
                rec = {"frac": str(alpha), "kind": self.kind,
                       "poly": format_poly(self.values[alpha])}
                fh.write(json.dumps(rec) + "\n")

    @classmethod
    def load(cls, path: str, kind: str, variables: tuple[str, ...],
             recompute: Callable[[Fraction], Poly] | None = None,
             sample: float = 0.01, seed: int = 0,
             on_corrupt: str = "abort") -> "MemoStore":
        """Read a snapshot; corrupt lines abort or are skipped per `on_corrupt`.

        When `recompute` is given, a random `sample` share of the records
        (at least one) is recomputed from scratch and compared.
        """
        store = cls(kind, variables)
        with open(path) as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                    if rec["kind"] != kind:
                        raise ValueError(f"kind {rec['kind']!r} != {kind!r}")
                    alpha = Fraction.parse(rec["frac"])
                    value = parse_poly(rec["poly"], variables)
                except Exception as exc:
                    if on_corrupt == "skip":
                        continue
                    raise SnapshotError(f"{path}:{lineno}: {exc}") from exc
                store.values[alpha] = value
        if recompute is not None and store.values:
            rng = random.Random(seed)
            keys = sorted(store.values, key=lambda a: (a.den, a.num))
            n = max(1, int(len(keys) * sample))
            for alpha in rng.sample(keys, n):
                fresh = recompute(alpha)
                if fresh != store.values[alpha]:
                    raise SnapshotError(
                        f"{path}: stored value at {alpha} disagrees with recomputation")
        return store


class SnapshotError(ValueError):
    pass


class Family:
    """Evaluator for one polynomial family (seeds + optional monomial twist).

    A twist of None is the genuine Farey recursive case.  Otherwise
    twist(beta) supplies the monomial multiplying F(gamma) F(gamma + beta)
    in the reduced recursion.
    """

    def __init__(self, kind: str, variables, seed0: Poly, seed_inf: Poly,
                 seed1: Poly, twist: Callable[[Fraction], Poly] | None = None,
                 store: MemoStore | None = None):
        self.kind = kind
        self.variables = tuple(variables)
        self.seed0 = seed0
        self.seed_inf = seed_inf
        self.seed1 = seed1
        self.twist = twist
        self.store = store if store is not None else MemoStore(kind, variables)
        self._period4 = seed_inf.is_zero
        if self._period4:
            self._int_cycle = (seed0, seed1, -seed0, -seed1)

    # -- point evaluation ----------------------------------------------------

    def value(self, alpha: Fraction) -> Poly:
        if alpha.is_infinity:
            return self.seed_inf
        if alpha.is_integer:
            return self._int_value(alpha.num)
        cached = self.store.get(alpha)
        if cached is not None:
            return cached
        # iterative so deep continued-fraction chains don't hit the
        # interpreter recursion limit
        pending = [alpha]
        while pending:
            a = pending[-1]
            gamma, beta = decompose(a)
            gb = farey_sum(gamma, beta)
            args = [v for v in (gamma, beta, gb)
                    if not (v.is_infinity or v.is_integer or v in self.store)]
            if args:
                pending.extend(args)
                continue
            pending.pop()
            if a in self.store:
                continue
            prod = self._sub_value(gamma) * self._sub_value(gb)
            if self.twist is not None:
                tw = self.twist(beta)
                if tw is not None:
                    prod = tw * prod
            self.store.put(a, -self._sub_value(beta) + prod)
        return self.store.get(alpha)

    def _sub_value(self, alpha: Fraction) -> Poly:
        if alpha.is_infinity:
            return self.seed_inf
        if alpha.is_integer:
            return self._int_value(alpha.num)
        return self.store.get(alpha)

    def _int_value(self, n: int) -> Poly:
        if self._period4:
            return self._int_cycle[n % 4]
        cached = self.store.get(Fraction(n))
        if cached is not None:
            return cached
        # walk the integer recursion a_{j+1} = -a_{j-1} + F(1/0) a_j outward from (0, 1)
        if n >= 0:
            a, b = self.seed0, self.seed1
            for k in range(2, n + 1):
                a, b = b, -a + self.seed_inf * b
                self.store.put(Fraction(k), b)
            return b if n >= 1 else a
        a, b = self.seed0, self.seed1
        for k in range(-1, n - 1, -1):
            a, b = -b + self.seed_inf * a, a
            self.store.put(Fraction(k), a)
        return a

    # -- values along a triangle side -----------------------------------------

    def boundary_values(self, alpha: Fraction, count: int) -> list[Poly]:
        """The family along the positive vertex sequence of alpha.

        Iterates the recursion matrix [[0, 1], [-1, F(alpha)]] from the two
        values flanking the positive corner, so it costs one multiplication
        per term after the anchors.  Twisted families do not satisfy this
        linear recursion, so they are refused.
        """
        if self.twist is not None:
            raise ValueError("boundary iteration only applies to untwisted families")
        if count < 2:
            raise ValueError("need at least two terms")
        if alpha.is_infinity:
            prev, first = Fraction(-1), Fraction(0)
        elif alpha.is_integer:
            prev, first = Fraction(alpha.num - 1), INFINITY
        else:
            lo, hi = parents(alpha)
            prev, first = lo, hi
        m = self.value(alpha)
        a, b = self.value(prev), self.value(first)
        out = [b]
        for _ in range(count - 1):
            a, b = b, -a + m * b
            out.append(b)
        return out

    # -- streaming batch -------------------------------------------------------

    def iter_range(self, max_den: int, lo: Fraction, hi: Fraction
                   ) -> Iterator[tuple[Fraction, Poly]]:
        """Yield (fraction, value) ascending over [lo, hi], denominators below max_den.

        Walks the Farey-pair tree in order, carrying the three values each
        mediant needs, so every fraction is computed exactly once and memory
        stays proportional to the tree depth instead of the output size.
        """
        if not self._period4:
            raise ValueError("streaming batch needs value 0 at infinity")
        if lo.is_infinity or hi.is_infinity or hi < lo:
            raise ValueError("need finite lo <= hi")
        if max_den < 1:
            return
        n0 = lo.num // lo.den  # floor
        n1 = -((-hi.num) // hi.den)  # ceil
        for n in range(n0, n1 + 1):
            a = Fraction(n)
            if max_den > 1 and lo <= a <= hi:
                yield a, self._int_value(n)
            if n < n1:
                yield from self._walk_interval(n, max_den, lo, hi)

    def _walk_interval(self, n: int, cap: int, lo: Fraction, hi: Fraction
                       ) -> Iterator[tuple[Fraction, Poly]]:
        twist = self.twist
        left = Fraction(n)
        right = Fraction(n + 1)
        if hi < left or right < lo:
            return
        stack: list[tuple] = [
            (False, left, right, self._int_value(n), self._int_value(n + 1), self.seed_inf)]
        while stack:
            frame = stack.pop()
            if frame[0]:
                _, m, vm, right, v_right, v_left = frame
                if lo <= m <= hi:
                    yield m, vm
                stack.append((False, m, right, vm, v_right, v_left))
                continue
            _, left, right, v_left, v_right, v_diff = frame
            md = left.den + right.den
            if md >= cap or hi < left or right < lo:
                continue
            m = Fraction._raw(left.num + right.num, md)
            prod = v_left * v_right
            if twist is not None:
                dn, dd = right.num - left.num, right.den - left.den
                if dd < 0 or (dd == 0 and dn < 0):
                    dn, dd = -dn, -dd
                tw = twist(Fraction._raw(dn, dd))
                if tw is not None:
                    prod = tw * prod
            vm = -v_diff + prod
            stack.append((True, m, vm, right, v_right, v_left))
            stack.append((False, left, m, v_left, vm, v_right))


# -- parity bookkeeping -------------------------------------------------------


def parity_bits(alpha: Fraction) -> tuple[int, int]:
    """(exponent of x, exponent of z) in the parity monomial dividing the trace."""
    p, q = alpha.num, alpha.den
    return (p * q + 1) % 2, p % 2


def parity_monomial(alpha: Fraction) -> Poly:
    f1, f2 = parity_bits(alpha)
    return Poly(VARS_XZ, {(f1, f2): 1})


# -- the concrete families -----------------------------------------------------


def _char_twist(beta: Fraction) -> Poly | None:
    r, s = beta.num, beta.den
    if s % 2 == 0:
        return None
    if r % 2 == 1:
        return _BIG_X
    return _BIG_Z


def _riley_twist(beta: Fraction) -> Poly | None:
    r, s = beta.num, beta.den
    if s % 2 == 0:
        return None
    if r % 2 == 1:
        return _RILEY_X
    return _RILEY_NEG_X


_BIG_X = Poly.variable(VARS_BIG, "X")
_BIG_Z = Poly.variable(VARS_BIG, "Z")
_RILEY_X = Poly.variable(VARS_X, "X")
_RILEY_NEG_X = -_RILEY_X

TRACE_SPEC = FRFSpec(VARS_XZ, Poly.variable(VARS_XZ, "x"),
                     Poly.zero(VARS_XZ), Poly.variable(VARS_XZ, "z"))
GENERIC_SPEC = FRFSpec(VARS_XYZ, Poly.variable(VARS_XYZ, "x"),
                       Poly.variable(VARS_XYZ, "y"), Poly.variable(VARS_XYZ, "z"))


def family_from_spec(kind: str, spec: FRFSpec, store: MemoStore | None = None) -> Family:
    return Family(kind, spec.variables, spec.seed0, spec.seed_inf, spec.seed1,
                  twist=None, store=store)


def make_family(kind: str, store: MemoStore | None = None) -> Family:
    """Fresh evaluator for one of the named families: T, U, T0, riley."""
    if kind == "T":
        return family_from_spec("T", TRACE_SPEC, store)
    if kind == "U":
        return family_from_spec("U", GENERIC_SPEC, store)
    if kind == "T0":
        one = Poly.const(VARS_BIG, 1)
        return Family("T0", VARS_BIG, one, Poly.zero(VARS_BIG), one,
                      twist=_char_twist, store=store)
    if kind == "riley":
        one = Poly.const(VARS_X, 1)
        return Family("riley", VARS_X, one, Poly.zero(VARS_X), one,
                      twist=_riley_twist, store=store)
    raise ValueError(f"unknown family kind {kind!r}")


_trace = make_family("T")
_generic = make_family("U")
_char = make_family("T0")
_riley = make_family("riley")

_UV_IMAGES = {
    "X": parse_poly("2 - v", VARS_UV),
    "Z": parse_poly("2 + v - u^2", VARS_UV),
}


def trace_poly(alpha: Fraction) -> Poly:
    """Trace polynomial in Z[x, z]; total degree equals den(alpha) on [0, 1]."""
    return _trace.value(alpha)


def generic_poly(alpha: Fraction) -> Poly:
    """The universal Farey recursive value in Z[x, y, z] (seeds x, y, z)."""
    return _generic.value(alpha)


def char_poly(alpha: Fraction) -> Poly:
    """Character-variety polynomial in Z[X, Z]."""
    return _char.value(alpha)


def riley_poly(alpha: Fraction) -> Poly:
    """Riley polynomial in Z[X]: the character polynomial at Z = -X."""
    return _riley.value(alpha)


def uv_poly(alpha: Fraction) -> Poly:
    """Character polynomial in the trace coordinates (u, v): X = 2-v, Z = 2+v-u^2."""
    p = char_poly(alpha)
    if p.is_constant():
        return Poly.const(VARS_UV, p.constant_value())
    return p.substitute(_UV_IMAGES)


def char_poly_from_trace(alpha: Fraction) -> Poly:
    """Character polynomial computed the defining way: divide the trace value
    by its parity monomial and halve the (then necessarily even) exponents.

    A remainder or an odd exponent would mean the parity bookkeeping is
    broken, so those raise instead of being papered over.
    """
    t = trace_poly(alpha)
    quotient = t.exact_divide(parity_monomial(alpha))
    if quotient is None:
        raise RuntimeError(f"parity monomial does not divide the trace value at {alpha}")
    terms = {}
    for (i, j), c in quotient.terms.items():
        if i % 2 or j % 2:
            raise RuntimeError(f"odd exponent survives in trace/parity quotient at {alpha}")
        terms[(i // 2, j // 2)] = c
    return Poly(VARS_BIG, terms)


def frf_value(spec: FRFSpec, store: MemoStore, alpha: Fraction) -> Poly:
    """Evaluate the Farey recursive function with the given seeds, memoized in store."""
    fam = Family(store.kind, spec.variables, spec.seed0, spec.seed_inf, spec.seed1,
                 twist=None, store=store)
    return fam.value(alpha)


def boundary_values(spec: FRFSpec, store: MemoStore, alpha: Fraction,
                    count: int) -> list[Poly]:
    fam = Family(store.kind, spec.variables, spec.seed0, spec.seed_inf, spec.seed1,
                 twist=None, store=store)
    return fam.boundary_values(alpha, count)


def reducible_locus(u0: complex, v0: complex) -> complex:
    """(2 - v0)(2 + v0 - u0^2); zero exactly on the reducible characters."""
    return (2 - v0) * (2 + v0 - u0 * u0)


def iter_family(kind: str, max_den: int, lo: Fraction, hi: Fraction
                ) -> Iterator[tuple[Fraction, Poly]]:
    """Stream (fraction, polynomial) rows in ascending order for a batch run.

    `uv` rows are derived from the character walk by substitution.
    """
    if kind == "uv":
        for alpha, p in make_family("T0").iter_range(max_den, lo, hi):
            if p.is_constant():
                yield alpha, Poly.const(VARS_UV, p.constant_value())
            else:
                yield alpha, p.substitute(_UV_IMAGES)
        return
    yield from make_family(kind).iter_range(max_den, lo, hi)
