"""Sparse polynomials over the rationals in one or two named variables."""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from . import _dense, _zpoly

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


class DomainError(ValueError):
    """An argument lies outside the domain of an exact operation."""


def format_rational(q: Scalar) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


class Poly:
    """Immutable sparse polynomial ``{exponent tuple: Fraction}``.

    Zero coefficients are never stored. Arithmetic requires both operands to
    have the same variable tuple; scalars are promoted.
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, Scalar] = ()):
        variables = tuple(variables)
        if not 1 <= len(variables) <= 2 or len(set(variables)) != len(variables):
            raise DomainError(f"expected one or two distinct variables, got {variables!r}")
        clean: Dict[Exponent, Fraction] = {}
        for e, c in dict(terms).items():
            e = tuple(int(k) for k in e)
            if len(e) != len(variables) or any(k < 0 for k in e):
                raise DomainError(f"bad exponent {e!r} for variables {variables!r}")
            if c:
                clean[e] = Fraction(c)
        self.variables = variables
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def _raw(cls, variables: Tuple[str, ...], terms: Dict[Exponent, Fraction]) -> "Poly":
        p = object.__new__(cls)
        p.variables = variables
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar, variables: Sequence[str]) -> "Poly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "Poly":
        variables = tuple(variables)
        e = tuple(1 if v == name else 0 for v in variables)
        if sum(e) != 1:
            raise DomainError(f"{name!r} is not one of {variables!r}")
        return cls(variables, {e: 1})

    @classmethod
    def monomial(cls, exps: Exponent, variables: Sequence[str], c: Scalar = 1) -> "Poly":
        return cls(variables, {tuple(exps): c})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Scalar], variable: str) -> "Poly":
        """Univariate polynomial from coefficients listed lowest degree first."""
        return cls((variable,), {(i,): c for i, c in enumerate(coeffs)})

    # -- inspection -----------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, exps: Exponent) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * len(self.variables))

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        k = self.variables.index(var)
        return max(e[k] for e in self._terms)

    def free_of(self, var: str) -> bool:
        return var not in self.variables or self.degree(var) <= 0

    def least_term(self) -> Tuple[Exponent, Fraction]:
        """Least term by (total degree, exponent of the first variable)."""
        e = min(self._terms, key=lambda x: (sum(x), x))
        return e, self._terms[e]

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise DomainError(
                    f"variable mismatch {self.variables!r} vs {other.variables!r}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly._raw(self.variables, {})
            return Poly._raw(self.variables, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw(self.variables, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise DomainError("negative power of a polynomial")
        result = Poly.const(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.variables)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    # -- structural maps -------------------------------------------------------

    def embed(self, variables: Sequence[str]) -> "Poly":
        """Same polynomial viewed over a superset variable tuple."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        try:
            idx = [variables.index(v) for v in self.variables]
        except ValueError:
            raise DomainError(f"cannot embed {self.variables!r} into {variables!r}") from None
        out = {}
        for e, c in self._terms.items():
            new = [0] * len(variables)
            for k, i in enumerate(idx):
                new[i] = e[k]
            out[tuple(new)] = c
        return Poly._raw(variables, out)

    def restrict(self, variables: Sequence[str]) -> "Poly":
        """Drop variables that do not occur; raises if an occurring one is dropped."""
        variables = tuple(variables)
        idx = [self.variables.index(v) for v in variables]
        out = {}
        for e, c in self._terms.items():
            if sum(e) != sum(e[i] for i in idx):
                raise DomainError(f"polynomial depends on variables outside {variables!r}")
            out[tuple(e[i] for i in idx)] = c
        return Poly._raw(variables, out)

    def swap(self) -> "Poly":
        """Exchange the two variable slots (x<->y) keeping the variable names."""
        return Poly._raw(self.variables, {e[::-1]: c for e, c in self._terms.items()})

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        vals = [Fraction(point[v]) for v in self.variables]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for x, k in zip(vals, e):
                term *= x**k
            total += term
        return total

    def compose(self, images: Mapping[str, "Poly"], variables: Sequence[str]) -> "Poly":
        """Substitute a polynomial for every variable; results live in ``variables``."""
        variables = tuple(variables)
        gens = [images[v] for v in self.variables]
        powers: list[dict] = [{} for _ in gens]
        out = Poly._raw(variables, {})
        for e, c in self._terms.items():
            term = Poly.const(c, variables)
            for k, n in enumerate(e):
                if n:
                    cache = powers[k]
                    if n not in cache:
                        cache[n] = gens[k] ** n
                    term = term * cache[n]
            out = out + term
        return out

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self._terms:
            return Fraction(0)
        den = lcm(*(c.denominator for c in self._terms.values()))
        num = gcd(*(c.numerator * (den // c.denominator) for c in self._terms.values()))
        return Fraction(num, den)

    # -- dense conversion ---------------------------------------------------------

    def to_dense1(self) -> _dense.UPoly:
        if len(self.variables) != 1:
            raise DomainError("not univariate")
        if not self._terms:
            return []
        out = [Fraction(0)] * (self.degree() + 1)
        for (i,), c in self._terms.items():
            out[i] = c
        return out

    @classmethod
    def from_dense1(cls, a: Sequence, variables: Sequence[str]) -> "Poly":
        return cls._raw(tuple(variables), {(i,): Fraction(c) for i, c in enumerate(a) if c})

    def to_dense2(self) -> _dense.BPoly:
        """Coefficient list in the first variable of polynomials in the second."""
        if len(self.variables) != 2:
            raise DomainError("not bivariate")
        if not self._terms:
            return []
        out: _dense.BPoly = [[] for _ in range(self.degree(self.variables[0]) + 1)]
        for (i, j), c in self._terms.items():
            row = out[i]
            if len(row) <= j:
                row.extend([Fraction(0)] * (j + 1 - len(row)))
            row[j] = c
        return out

    @classmethod
    def from_dense2(cls, a: _dense.BPoly, variables: Sequence[str]) -> "Poly":
        terms = {}
        for i, row in enumerate(a):
            for j, c in enumerate(row):
                if c:
                    terms[(i, j)] = Fraction(c)
        return cls._raw(tuple(variables), terms)

    # -- text and JSON ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly({self.variables!r}, {str(self)!r})"

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [
                {"exponents": list(e), "coefficient": format_rational(c)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> "Poly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            data["variables"],
            {tuple(t["exponents"]): parse_rational(t["coefficient"]) for t in data["terms"]},
        )


def _int_dense(p: Poly):
    """(c, dense integer coefficients) with p = c * that polynomial."""
    c = p.content()
    if len(p.variables) == 1:
        out = [0] * (p.degree() + 1)
        for (i,), x in p.items():
            out[i] = int(x / c)
        return c, out
    out = [[] for _ in range(p.degree(p.variables[0]) + 1)]
    for (i, j), x in p.items():
        row = out[i]
        if len(row) <= j:
            row.extend([0] * (j + 1 - len(row)))
        row[j] = int(x / c)
    return c, out


def _from_int_dense(a, variables, c=1) -> Poly:
    terms = {}
    if len(variables) == 1:
        for i, x in enumerate(a):
            if x:
                terms[(i,)] = Fraction(x) * c
    else:
        for i, row in enumerate(a):
            for j, x in enumerate(row):
                if x:
                    terms[(i, j)] = Fraction(x) * c
    return Poly._raw(tuple(variables), terms)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Gcd of two polynomials in the same one or two variables, up to a scalar.

    Integer heuristic gcd first; the rational remainder-sequence gcd is the
    fallback when the heuristic gives up.
    """
    if a.variables != b.variables:
        raise DomainError("variable mismatch")
    if a.is_zero() or b.is_zero():
        return b if a.is_zero() else a
    _, za = _int_dense(a)
    _, zb = _int_dense(b)
    if len(a.variables) == 1:
        g = _zpoly.z_gcd(za, zb)
        if g is None:
            return Poly.from_dense1(_dense.u_gcd(a.to_dense1(), b.to_dense1()), a.variables)
        return _from_int_dense(g, a.variables)
    g = _zpoly.zb_gcd(za, zb)
    if g is None:
        return Poly.from_dense2(_dense.b_gcd(a.to_dense2(), b.to_dense2()), a.variables)
    return _from_int_dense(g, a.variables)


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    """Exact quotient; raises ``_dense.InexactDivision`` on a remainder."""
    if a.variables != b.variables:
        raise DomainError("variable mismatch")
    if b.is_zero():
        raise DomainError("division by the zero polynomial")
    if a.is_zero():
        return a
    if len(b) == 1:
        (eb, cb), = b.items()
        out = {}
        for e, c in a.items():
            q = tuple(x - y for x, y in zip(e, eb))
            if min(q) < 0:
                raise _dense.InexactDivision("polynomial division leaves a remainder")
            out[q] = c / cb
        return Poly._raw(a.variables, out)
    ca, za = _int_dense(a)
    cb, zb = _int_dense(b)
    # b primitive over Z: divisibility over Q implies divisibility over Z
    if len(a.variables) == 1:
        q = _zpoly.z_exact_div(za, zb)
    else:
        q = _zpoly.zb_exact_div(za, zb)
    if q is None:
        raise _dense.InexactDivision("polynomial division leaves a remainder")
    return _from_int_dense(q, a.variables, ca / cb)


def prod(polys: Iterable[Poly], variables: Sequence[str]) -> Poly:
    out = Poly.const(1, variables)
    for p in polys:
        out = out * p
    return out
