"""Elementary-fraction decompositions over fixed, known denominators.

Two shapes are supported:

* in ``t`` with coefficients rational in ``v``: poles ``(1 - alpha(v) t)^-k``
  for caller-supplied ``alpha`` (in practice 1, -1 and v);
* in ``v`` alone: the basis ``(1-v)^-k``, ``(1+v)^-k``, ``(1+v^2)^-k`` and
  ``v (1+v^2)^-k`` plus a polynomial part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple, Union

from ._dense import InexactDivision
from .poly import DomainError, Poly, format_rational, poly_exact_div
from .ratfunc import FactorizationError, RatFunc, substitute

_exact = poly_exact_div


def binomial_series_coeff(k: int, m: int) -> int:
    """Coefficient of ``z^m`` in ``(1-z)^-(k+1)``, that is ``C(k+m, k)``."""
    if k < 0 or m < 0:
        raise DomainError("binomial_series_coeff needs non-negative arguments")
    return comb(k + m, k)


# -- decomposition in t -------------------------------------------------------


@dataclass(frozen=True)
class LinearPole:
    """The elementary denominator ``(1 - alpha*t)^power``; ``alpha`` is a polynomial in v."""

    alpha: Poly
    power: int

    def denominator(self, variables: Tuple[str, str]) -> Poly:
        t = Poly.var(variables[0], variables)
        return (1 - self.alpha.embed(variables) * t) ** self.power

    def __str__(self) -> str:
        a = str(self.alpha)
        if a == "1":
            base = "1 - t"
        elif a == "-1":
            base = "1 + t"
        else:
            base = f"1 - ({a})*t"
        return f"({base})^-{self.power}"


@dataclass(frozen=True)
class PartialFractionT:
    """Sum of ``numerator(v) / (1 - alpha(v) t)^k`` over the stored terms."""

    variables: Tuple[str, str]
    terms: Tuple[Tuple[LinearPole, RatFunc], ...]

    def recombine(self) -> RatFunc:
        total = RatFunc.const(0, self.variables)
        for pole, c in self.terms:
            total = total + c.embed(self.variables) / RatFunc(pole.denominator(self.variables))
        return total

    def coefficient(self, alpha: Union[int, Poly], power: int) -> RatFunc:
        alpha = _as_alpha(alpha, self.variables[1])
        for pole, c in self.terms:
            if pole.alpha == alpha and pole.power == power:
                return c
        return RatFunc.const(0, (self.variables[1],))


def _as_alpha(alpha, var: str) -> Poly:
    if isinstance(alpha, Poly):
        return alpha.restrict((var,)) if alpha.variables != (var,) else alpha
    return Poly.const(alpha, (var,))


def _series_in_s(f: RatFunc, order: int) -> List[RatFunc]:
    """First ``order`` coefficients in the major variable, over Q(minor)."""
    minor = (f.variables[1],)
    num = [Poly.from_dense1(row, minor) for row in f.num.to_dense2()]
    den = [Poly.from_dense1(row, minor) for row in f.den.to_dense2()]
    if not den or den[0].is_zero():
        raise FactorizationError("pole at the expansion point")
    out: List[RatFunc] = []
    d0 = RatFunc(den[0])
    for n in range(order):
        acc = RatFunc(num[n]) if n < len(num) else RatFunc.const(0, minor)
        for k in range(1, min(n, len(den) - 1) + 1):
            if not den[k].is_zero():
                acc = acc - RatFunc(den[k]) * out[n - k]
        out.append(acc / d0)
    return out


def partial_fractions_t(
    f: RatFunc, factored_den: Sequence[Tuple[Union[int, Poly], int]]
) -> PartialFractionT:
    """Decompose ``f(t, v)`` over poles ``(1 - alpha t)^m``.

    ``factored_den`` lists ``(alpha, m)`` pairs; their product times a factor
    free of ``t`` must equal the denominator of ``f``, and ``f`` must be
    proper in ``t``.
    """
    variables = f.variables
    if len(variables) != 2:
        raise DomainError("partial_fractions_t expects a function of (t, v)")
    t, v = variables
    factors = [(_as_alpha(a, v), int(m)) for a, m in factored_den]
    if any(a.is_zero() for a, _ in factors) or any(m <= 0 for _, m in factors):
        raise FactorizationError("every factor needs a nonzero alpha and positive multiplicity")
    full = Poly.const(1, variables)
    for a, m in factors:
        full = full * LinearPole(a, m).denominator(variables)
    try:
        rest = _exact(f.den, full)
    except InexactDivision:
        raise FactorizationError("supplied factors do not divide the denominator") from None
    if not rest.free_of(t):
        raise FactorizationError("denominator has t-dependent factors beyond those supplied")
    if f.num.degree(t) >= full.degree(t):
        raise DomainError("f is not proper in t")

    s = "_s" if "_s" not in variables else "__s"
    local = (s, v)
    terms: List[Tuple[LinearPole, RatFunc]] = []
    for i, (alpha, m) in enumerate(factors):
        cofactor = rest
        for j, (b, n) in enumerate(factors):
            if j != i:
                cofactor = cofactor * LinearPole(b, n).denominator(variables)
        g = RatFunc(f.num, cofactor)
        # 1 - alpha*t = s  <=>  t = (1 - s)/alpha
        t_image = (RatFunc.const(1, local) - RatFunc.var(s, local)) / RatFunc(alpha.embed(local))
        g_s = substitute(g, {t: t_image, v: RatFunc.var(v, local)})
        coeffs = _series_in_s(g_s, m)
        for k in range(m, 0, -1):
            c = coeffs[m - k]
            if not c.is_zero():
                terms.append((LinearPole(alpha, k), c))
    return PartialFractionT(variables, tuple(terms))


# -- decomposition in v -------------------------------------------------------

# basis labels: ("1-v", k), ("1+v", k), ("1+v^2", k) and ("v/1+v^2", k)
BasisKey = Tuple[str, int]


@dataclass(frozen=True)
class PartialFractionV:
    """``polynomial + sum coefficient * basis_element`` in a single variable."""

    variable: str
    coefficients: Dict[BasisKey, Fraction] = field(default_factory=dict)
    polynomial: Poly | None = None

    def basis_element(self, key: BasisKey) -> RatFunc:
        return _basis_element(key, self.variable)

    def recombine(self) -> RatFunc:
        vs = (self.variable,)
        total = RatFunc(self.polynomial) if self.polynomial is not None else RatFunc.const(0, vs)
        for key, c in self.coefficients.items():
            total = total + self.basis_element(key) * c
        return total

    def get(self, kind: str, k: int) -> Fraction:
        return self.coefficients.get((kind, k), Fraction(0))

    def __str__(self) -> str:
        parts = []
        for (kind, k), c in sorted(self.coefficients.items()):
            num, base = ("v", "1+v^2") if kind.startswith("v/") else ("1", kind)
            parts.append(f"({format_rational(c)})*{num}/({base})^{k}")
        if self.polynomial is not None and not self.polynomial.is_zero():
            parts.append(str(self.polynomial))
        return " + ".join(parts) or "0"


def _basis_element(key: BasisKey, var: str) -> RatFunc:
    vs = (var,)
    v = Poly.var(var, vs)
    kind, k = key
    if kind == "1-v":
        return RatFunc(Poly.const(1, vs), (1 - v) ** k)
    if kind == "1+v":
        return RatFunc(Poly.const(1, vs), (1 + v) ** k)
    if kind == "1+v^2":
        return RatFunc(Poly.const(1, vs), (1 + v * v) ** k)
    if kind == "v/1+v^2":
        return RatFunc(v, (1 + v * v) ** k)
    raise DomainError(f"unknown basis element {kind!r}")


def _strip(den: Poly, factor: Poly) -> tuple[Poly, int]:
    k = 0
    while True:
        try:
            q = _exact(den, factor)
        except InexactDivision:
            return den, k
        den, k = q, k + 1


def _solve(matrix: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    n = len(matrix)
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular system in partial fraction solve")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]


def partial_fractions_v(f: RatFunc) -> PartialFractionV:
    """Decompose ``f(v)`` whose denominator is ``(1-v)^a (1+v)^b (1+v^2)^c`` times a constant."""
    if len(f.variables) != 1:
        raise DomainError("partial_fractions_v expects a univariate function")
    (var,) = f.variables
    vs = (var,)
    v = Poly.var(var, vs)
    den = f.den
    den, a = _strip(den, 1 - v)
    den, b = _strip(den, 1 + v)
    den, c = _strip(den, 1 + v * v)
    if not den.is_constant():
        raise FactorizationError(f"denominator has a factor outside (1-v), (1+v), (1+v^2): {den}")

    keys: List[BasisKey] = (
        [("1-v", k) for k in range(1, a + 1)]
        + [("1+v", k) for k in range(1, b + 1)]
        + [("1+v^2", k) for k in range(1, c + 1)]
        + [("v/1+v^2", k) for k in range(1, c + 1)]
    )
    full = f.den
    n_deg = f.num.degree()
    d_deg = full.degree()
    poly_len = max(0, n_deg - d_deg + 1)
    columns: List[Poly] = []
    for key in keys:
        elem = _basis_element(key, var)
        columns.append(_exact(full, elem.den) * elem.num)
    for i in range(poly_len):
        columns.append(full * v**i)
    size = max(n_deg, d_deg - 1 + poly_len) + 1
    if len(columns) != size:
        raise ArithmeticError("partial fraction system is not square")
    matrix = [[col.coeff((r,)) for col in columns] for r in range(size)]
    rhs = [f.num.coeff((r,)) for r in range(size)]
    sol = _solve(matrix, rhs)
    coeffs = {key: x for key, x in zip(keys, sol) if x != 0}
    poly = Poly.from_dense1(sol[len(keys):], vs) if poly_len else None
    return PartialFractionV(var, coeffs, poly)
