"""Reduced fractions of polynomials in one or two variables."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, Sequence, Union

from ._dense import InexactDivision
from .poly import DomainError, Poly, Scalar, poly_exact_div, poly_gcd


class FactorizationError(DomainError):
    """A supplied or required factorization does not match the denominator."""


class ConsistencyError(ArithmeticError):
    """An identity that must hold exactly (such as a forced cancellation) failed."""


def _canonical_scale(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    # integer coefficients, jointly primitive, positive least denominator term
    if num.is_zero():
        return num, Poly.const(1, den.variables)
    a, b = num.content(), den.content()
    c = Fraction(gcd(a.numerator, b.numerator), lcm(a.denominator, b.denominator))
    if den.least_term()[1] < 0:
        c = -c
    if c == 1:
        return num, den
    return num * (1 / c), den * (1 / c)


class RatFunc:
    """A reduced fraction ``num/den`` of polynomials over the same variables.

    Construction always normalizes: the common polynomial factor is removed,
    both parts get coprime integer coefficients, and the least denominator
    term (by total degree, then first-variable degree) is positive. Equality
    is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Union[Poly, Scalar], den: Union[Poly, Scalar] = 1, *, variables=None,
                 _reduced: bool = False):
        if variables is None:
            variables = num.variables if isinstance(num, Poly) else den.variables
        variables = tuple(variables)
        if not isinstance(num, Poly):
            num = Poly.const(num, variables)
        if not isinstance(den, Poly):
            den = Poly.const(den, variables)
        if num.variables != den.variables:
            raise DomainError(f"variable mismatch {num.variables!r} vs {den.variables!r}")
        if den.is_zero():
            raise DomainError("zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        num, den = _canonical_scale(num, den)
        self.num = num
        self.den = den

    @property
    def variables(self) -> tuple:
        return self.num.variables

    # -- constructors ---------------------------------------------------------

    @classmethod
    def const(cls, c: Scalar, variables: Sequence[str]) -> "RatFunc":
        return cls(Poly.const(c, variables))

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "RatFunc":
        return cls(Poly.var(name, variables))

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.variables != self.variables:
                raise DomainError(f"variable mismatch {self.variables!r} vs {other.variables!r}")
            return other
        if isinstance(other, Poly):
            return RatFunc(other.embed(self.variables) if other.variables != self.variables else other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        d1 = poly_exact_div(self.den, g)
        d2 = poly_exact_div(other.den, g)
        return RatFunc(self.num * d2 + other.num * d1, d1 * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        # cross-cancel so the product needs no further gcd
        g1 = poly_gcd(self.num, other.den) if not self.num.is_zero() else other.den
        g2 = poly_gcd(other.num, self.den) if not other.num.is_zero() else self.den
        n = poly_exact_div(self.num, g1) * poly_exact_div(other.num, g2)
        d = poly_exact_div(self.den, g2) * poly_exact_div(other.den, g1)
        return RatFunc(n, d, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise DomainError("zero denominator")
        return RatFunc(self.den, self.num, _reduced=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num**n, self.den**n, _reduced=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if other.variables != self.variables:
            return False
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def same_form(self, other: "RatFunc") -> bool:
        """Identical normal forms (stronger-looking than ``==`` but equivalent)."""
        return self.num == other.num and self.den == other.den

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def expandable(self) -> bool:
        return self.den.constant_term() != 0

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        d = self.den.evaluate(point)
        if d == 0:
            raise DomainError("evaluation at a pole")
        return self.num.evaluate(point) / d

    def embed(self, variables: Sequence[str]) -> "RatFunc":
        return RatFunc(self.num.embed(variables), self.den.embed(variables), _reduced=True)

    def restrict(self, variables: Sequence[str]) -> "RatFunc":
        return RatFunc(self.num.restrict(variables), self.den.restrict(variables))

    def swap(self) -> "RatFunc":
        return RatFunc(self.num.swap(), self.den.swap(), _reduced=True)

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self.variables!r}, {str(self)!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero():
        return num, Poly.const(1, den.variables)
    if den.is_constant():
        return num, den
    g = poly_gcd(num, den)
    if g.is_constant():
        return num, den
    return poly_exact_div(num, g), poly_exact_div(den, g)


def normalize(num: Poly, den: Poly) -> RatFunc:
    """Reduced, sign-normalized fraction equal to ``num/den``."""
    return RatFunc(num, den)


def exact_quotient(a: Poly, b: Poly, what: str = "factor") -> Poly:
    """``a/b`` when ``b`` divides ``a``; ConsistencyError otherwise."""
    try:
        return poly_exact_div(a, b)
    except InexactDivision:
        raise ConsistencyError(f"{what} {b} does not cancel") from None


def _poly_image(p: Poly, images: Mapping[str, RatFunc], target: tuple) -> tuple[Poly, Poly]:
    """``p(images)`` as an unreduced pair (numerator, denominator)."""
    dens = {v: images[v].den for v in p.variables}
    if all(d.is_constant() for d in dens.values()):
        polys = {v: images[v].num * (1 / images[v].den.constant_term()) for v in p.variables}
        return p.compose(polys, target), Poly.const(1, target)
    degs = {v: p.degree(v) for v in p.variables}
    num = Poly.const(0, target)
    pw_n: dict = {}
    pw_d: dict = {}

    def power(cache, v, base, k):
        key = (v, k)
        if key not in cache:
            cache[key] = base**k
        return cache[key]

    for e, c in p.items():
        term = Poly.const(c, target)
        for v, k in zip(p.variables, e):
            img = images[v]
            if k:
                term = term * power(pw_n, v, img.num, k)
            if degs[v] - k:
                term = term * power(pw_d, v, img.den, degs[v] - k)
        num = num + term
    den = Poly.const(1, target)
    for v in p.variables:
        if degs[v] > 0:
            den = den * power(pw_d, v, images[v].den, degs[v])
    return num, den


def substitute(f: RatFunc, bindings: Mapping[str, Union[RatFunc, Poly]]) -> RatFunc:
    """Compose ``f`` with the given variable images.

    All images share one target variable tuple; a variable of ``f`` left
    unbound must belong to that tuple and maps to itself.
    """
    if not bindings:
        return f
    images: dict = {}
    target = None
    for v, img in bindings.items():
        if v not in f.variables:
            raise DomainError(f"{v!r} is not a variable of {f.variables!r}")
        if isinstance(img, Poly):
            img = RatFunc(img)
        if target is None:
            target = img.variables
        elif img.variables != target:
            raise DomainError("substituted values must share one variable list")
        images[v] = img
    for v in f.variables:
        if v not in images:
            if v not in target:
                raise DomainError(f"unbound variable {v!r} missing from target {target!r}")
            images[v] = RatFunc.var(v, target)
    n_num, n_den = _poly_image(f.num, images, target)
    d_num, d_den = _poly_image(f.den, images, target)
    if d_num.is_zero():
        raise DomainError("substitution makes the denominator identically zero")
    return RatFunc(n_num * d_den, d_num * n_den)
