"""Sparse multivariate polynomials over arbitrary-precision integers.

Terms live in a dict mapping exponent tuples to non-zero int coefficients.
Printing and leading-term selection use graded lexicographic order, highest
first.  Large products in one or two variables are routed through a packed
big-integer (Kronecker) multiplication so the heavy batch computations spend
their time inside CPython's native bignum multiply instead of dict loops.
"""

from __future__ import annotations

import math
from typing import Optional

# packed multiply kicks in for products with at least this many term pairs
_PACK_THRESHOLD = 256


class Poly:
    """Immutable sparse polynomial with a fixed, ordered variable tuple."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: tuple[str, ...], terms: dict | None = None):
        object.__setattr__(self, "vars", tuple(variables))
        object.__setattr__(self, "terms", dict(terms) if terms else {})

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "Poly":
        return cls(variables)

    @classmethod
    def const(cls, variables, c: int) -> "Poly":
        variables = tuple(variables)
        if c == 0:
            return cls(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, variables, name: str) -> "Poly":
        variables = tuple(variables)
        exp = [0] * len(variables)
        exp[variables.index(name)] = 1
        return cls(variables, {tuple(exp): 1})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def constant_value(self) -> int:
        """Coefficient of the constant term (0 if absent)."""
        return self.terms.get((0,) * len(self.vars), 0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("total degree of the zero polynomial is undefined")
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        exp = max(self.terms, key=lambda e: (sum(e), e))
        return exp, self.terms[exp]

    def leading_coefficient(self) -> int:
        return self.leading_term()[1]

    def content(self) -> int:
        """gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        return g

    def primitive_part(self) -> "Poly":
        """self divided by its content, sign-normalized to positive leading coefficient."""
        if not self.terms:
            return self
        g = self.content()
        if self.leading_coefficient() < 0:
            g = -g
        return Poly(self.vars, {e: c // g for e, c in self.terms.items()})

    # -- ring operations ---------------------------------------------------

    def _check_same_vars(self, other: "Poly"):
        if self.vars != other.vars:
            raise ValueError(f"variable sets differ: {self.vars} vs {other.vars}")

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.vars == other.vars
                and self.terms == other.terms)

    def __add__(self, other: "Poly") -> "Poly":
        self._check_same_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return Poly(self.vars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            if other == 0:
                return Poly(self.vars)
            return Poly(self.vars, {e: c * other for e, c in self.terms.items()})
        self._check_same_vars(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly(self.vars)
        n = len(self.vars)
        if n <= 2 and len(a) * len(b) >= _PACK_THRESHOLD:
            packed = _mul_packed(a, b, n)
            if packed is not None:
                return Poly(self.vars, packed)
        return Poly(self.vars, _mul_schoolbook(a, b))

    def __rmul__(self, other) -> "Poly":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, assignments: dict[str, "Poly"]) -> "Poly":
        """Compose with polynomial images; every variable occurring must be assigned."""
        used = {self.vars[i] for e in self.terms for i, k in enumerate(e) if k}
        missing = used - set(assignments)
        if missing:
            raise ValueError(f"no assignment for variable(s) {sorted(missing)}")
        target = None
        for img in assignments.values():
            if target is None:
                target = img.vars
            elif img.vars != target:
                raise ValueError("assignment images must share one variable set")
        if target is None:  # constant polynomial, no variables used
            target = self.vars
        out = Poly.zero(target)
        pow_cache: dict[tuple[str, int], Poly] = {}
        for e, c in self.terms.items():
            term = Poly.const(target, c)
            for i, k in enumerate(e):
                if not k:
                    continue
                key = (self.vars[i], k)
                if key not in pow_cache:
                    pow_cache[key] = assignments[self.vars[i]] ** k
                term = term * pow_cache[key]
            out = out + term
        return out

    def eval_complex(self, point: dict[str, complex]) -> complex:
        """Numeric evaluation; int coefficients convert exactly below 2**53."""
        missing = set(self.vars) - set(point)
        if missing:
            raise ValueError(f"no value for variable(s) {sorted(missing)}")
        vals = [point[v] for v in self.vars]
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v ** k
            total += t
        return total

    # -- division ----------------------------------------------------------

    def exact_divide(self, g: "Poly") -> Optional["Poly"]:
        """Quotient q with self = g*q over the integers, or None.

        Multivariate long division by the graded-lex leading term; any
        remainder or a non-integer coefficient step means no integer
        quotient exists and None is returned (quotients that exist only
        with rational coefficients count as not divisible).
        """
        self._check_same_vars(g)
        if not g.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return Poly(self.vars)
        g_exp, g_c = g.leading_term()
        rem = dict(self.terms)
        quot: dict[tuple[int, ...], int] = {}
        while rem:
            r_exp = max(rem, key=lambda e: (sum(e), e))
            r_c = rem[r_exp]
            exp = tuple(a - b for a, b in zip(r_exp, g_exp))
            if any(k < 0 for k in exp) or r_c % g_c:
                return None
            c = r_c // g_c
            quot[exp] = c
            for e2, c2 in g.terms.items():
                e = tuple(a + b for a, b in zip(exp, e2))
                s = rem.get(e, 0) - c * c2
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        return Poly(self.vars, quot)

    def derivative(self, name: str) -> "Poly":
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if not k:
                continue
            e2 = e[:i] + (k - 1,) + e[i + 1:]
            out[e2] = out.get(e2, 0) + c * k
        return Poly(self.vars, {e: c for e, c in out.items() if c})

    # -- printing and parsing ------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self.vars!r}, '{format_poly(self)}')"


def _mul_schoolbook(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(i + j for i, j in zip(ea, eb))
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def _mul_packed(a: dict, b: dict, nvars: int) -> dict | None:
    """Exact product via Kronecker packing into Python big integers.

    Coefficients are split into positive and negative parts so each packed
    integer has non-negative base-2**k digits, which keeps digit extraction
    a pure byte-slice operation.  Returns None when the product exponent box
    would be too sparse for packing to pay off.
    """
    dims = []
    for i in range(nvars):
        dims.append(max(e[i] for e in a) + max(e[i] for e in b) + 1)
    nslots = math.prod(dims)
    if nslots > 8 * len(a) * len(b) + 1024:
        return None
    sum_a = sum_b = max_a = max_b = 0
    for c in a.values():
        c = abs(c)
        sum_a += c
        if c > max_a:
            max_a = c
    for c in b.values():
        c = abs(c)
        sum_b += c
        if c > max_b:
            max_b = c
    bound = 2 * min(sum_a * max_b, sum_b * max_a)
    kb = bound.bit_length() // 8 + 1  # bytes per digit slot

    def pack(p: dict) -> tuple[int, int]:
        pos = bytearray(nslots * kb)
        neg = bytearray(nslots * kb)
        if nvars == 1:
            for e, c in p.items():
                off = e[0] * kb
                if c > 0:
                    pos[off:off + kb] = c.to_bytes(kb, "little")
                else:
                    neg[off:off + kb] = (-c).to_bytes(kb, "little")
        else:
            d0 = dims[0]
            for e, c in p.items():
                off = (e[0] + e[1] * d0) * kb
                if c > 0:
                    pos[off:off + kb] = c.to_bytes(kb, "little")
                else:
                    neg[off:off + kb] = (-c).to_bytes(kb, "little")
        return int.from_bytes(pos, "little"), int.from_bytes(neg, "little")

    ap, an = pack(a)
    bp, bn = pack(b)
    pos_digits = (ap * bp + an * bn).to_bytes(nslots * kb + kb, "little")
    neg_digits = (ap * bn + an * bp).to_bytes(nslots * kb + kb, "little")
    out: dict = {}
    if nvars == 1:
        for s in range(dims[0]):
            off = s * kb
            c = (int.from_bytes(pos_digits[off:off + kb], "little")
                 - int.from_bytes(neg_digits[off:off + kb], "little"))
            if c:
                out[(s,)] = c
    else:
        d0 = dims[0]
        for e1 in range(dims[1]):
            base = e1 * d0
            for e0 in range(d0):
                off = (base + e0) * kb
                c = (int.from_bytes(pos_digits[off:off + kb], "little")
                     - int.from_bytes(neg_digits[off:off + kb], "little"))
                if c:
                    out[(e0, e1)] = c
    return out


# -- univariate algorithms ---------------------------------------------------


def _single_variable(*polys: Poly) -> str:
    """The unique variable actually used by the given polynomials."""
    used = set()
    for p in polys:
        for e in p.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(p.vars[i])
    if len(used) > 1:
        raise ValueError(f"expected univariate input, got variables {sorted(used)}")
    if used:
        return used.pop()
    return polys[0].vars[0]


def _to_dense(p: Poly, name: str) -> list[int]:
    """Ascending coefficient list of a univariate polynomial."""
    i = p.vars.index(name)
    if not p.terms:
        return []
    n = max(e[i] for e in p.terms)
    out = [0] * (n + 1)
    for e, c in p.terms.items():
        out[e[i]] = c
    return out


def _from_dense(coeffs: list[int], variables: tuple[str, ...], name: str) -> Poly:
    i = variables.index(name)
    width = len(variables)
    terms = {}
    for k, c in enumerate(coeffs):
        if c:
            e = [0] * width
            e[i] = k
            terms[tuple(e)] = c
    return Poly(variables, terms)


def _dense_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_primitive(a: list[int]) -> list[int]:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    if g == 0:
        return a
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _dense_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b (b nonzero), all arithmetic over the integers."""
    a = a[:]
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        c = a[-1]
        a = [x * lb for x in a]
        for i, bc in enumerate(b):
            a[da - db + i] -= c * bc
        _dense_trim(a)
    return a


def gcd_univariate(f: Poly, g: Poly) -> Poly:
    """Primitive gcd of two univariate integer polynomials, positive leading coefficient.

    Uses a primitive polynomial-remainder sequence, so every intermediate
    value stays an integer and coefficient blow-up is kept in check.
    """
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    name = _single_variable(f, g)
    a = _dense_primitive(_dense_trim(_to_dense(f, name)))
    b = _dense_primitive(_dense_trim(_to_dense(g, name)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _dense_pseudo_rem(a, b)
        a, b = b, _dense_primitive(r)
    return _from_dense(_dense_primitive(a), f.vars, name)


def squarefree_part(f: Poly) -> Poly:
    """f divided by gcd(f, f'), primitive with positive leading coefficient."""
    if f.is_zero:
        raise ValueError("square-free part of the zero polynomial is undefined")
    name = _single_variable(f)
    fp = f.primitive_part()
    if fp.is_constant():
        return Poly.const(f.vars, 1)
    g = gcd_univariate(fp, fp.derivative(name))
    q = fp.exact_divide(g)
    assert q is not None, "primitive gcd must divide its argument"
    return q.primitive_part()


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun decomposition [(g1, 1), (g2, 2), ...] with f = content * prod gi**i.

    Only the non-constant factors are reported.
    """
    if f.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    name = _single_variable(f)
    fp = f.primitive_part()
    out: list[tuple[Poly, int]] = []
    if fp.is_constant():
        return out
    d = fp.derivative(name)
    a = gcd_univariate(fp, d)
    b = fp.exact_divide(a).primitive_part()
    c = d.exact_divide(a)
    assert c is not None
    d = c - b.derivative(name)
    i = 1
    while not b.is_constant():
        g = gcd_univariate(b, d) if not d.is_zero else b.primitive_part()
        if not g.is_constant():
            out.append((g, i))
        b_next = b.exact_divide(g)
        assert b_next is not None
        b = b_next.primitive_part()
        if d.is_zero:
            break
        c = d.exact_divide(g)
        assert c is not None
        d = c - b.derivative(name)
        i += 1
    return out


# -- canonical text form ------------------------------------------------------


def format_poly(p: Poly) -> str:
    """Graded-lex descending text form: `X^2*Z - 3*X*Z + 2*Z - 1`."""
    if not p.terms:
        return "0"
    parts = []
    for e in sorted(p.terms, key=lambda t: (sum(t), t), reverse=True):
        c = p.terms[e]
        factors = []
        for name, k in zip(p.vars, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        if not factors:
            body = str(abs(c))
        elif abs(c) == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(abs(c))] + factors)
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


class PolyParseError(ValueError):
    pass


def parse_poly(text: str, variables) -> Poly:
    """Parse the canonical form plus whitespace, implicit products and parenthesized factors.

    Accepts e.g. `X^2*Z - 3 X Z + 2Z - 1` and `-(X^2 - 2 X + 2) X`.
    """
    variables = tuple(variables)
    tokens = _tokenize(text, variables)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else ("end", "")

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def parse_expr() -> Poly:
        node = parse_term()
        while peek()[0] in ("+", "-"):
            op = take()[0]
            rhs = parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term() -> Poly:
        node = parse_factor()
        while True:
            kind = peek()[0]
            if kind == "*":
                take()
                node = node * parse_factor()
            elif kind in ("int", "var", "("):  # implicit product
                node = node * parse_factor()
            else:
                return node

    def parse_factor() -> Poly:
        sign = 1
        while peek()[0] in ("+", "-"):
            if take()[0] == "-":
                sign = -sign
        base = parse_atom()
        if peek()[0] == "^":
            take()
            kind, value = take()
            if kind != "int":
                raise PolyParseError("exponent must be an integer")
            base = base ** int(value)
        return base if sign == 1 else -base

    def parse_atom() -> Poly:
        kind, value = take()
        if kind == "int":
            return Poly.const(variables, int(value))
        if kind == "var":
            return Poly.variable(variables, value)
        if kind == "(":
            node = parse_expr()
            if take()[0] != ")":
                raise PolyParseError("unbalanced parentheses")
            return node
        raise PolyParseError(f"unexpected token {value!r}")

    result = parse_expr()
    if peek()[0] != "end":
        raise PolyParseError(f"trailing input at token {peek()[1]!r}")
    return result


def _tokenize(text: str, variables: tuple[str, ...]) -> list[tuple[str, str]]:
    tokens = []
    i = 0
    names = sorted(variables, key=len, reverse=True)
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j]))
            i = j
            continue
        for name in names:
            if text.startswith(name, i):
                tokens.append(("var", name))
                i += len(name)
                break
        else:
            if ch in "+-*^()":
                tokens.append((ch, ch))
                i += 1
            else:
                raise PolyParseError(f"unexpected character {ch!r}")
    return tokens
