"""Multiplicity series M'(f)(t, v) and the operators acting on them.

A symmetric function f(x, y) is recorded by its multiplicity series
``M'(f)(t, v) = sum m(l1, l2) t^(l1 - l2) v^l2``. Multiplicity series are plain
``RatFunc`` values over ``("t", "v")``; functions that need a series
expansion check that the denominator is nonzero at the origin.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

from .constants import CATALOG, Catalog
from .exactalg import (
    ConsistencyError,
    DomainError,
    LinearPole,
    PartialFractionT,
    Poly,
    RatFunc,
    exact_quotient,
    partial_fractions_t,
    substitute,
)
from .series import XY, TruncSeries2, expand

TV = ("t", "v")
MSeriesForm = RatFunc

_t = Poly.var("t", TV)
_v = Poly.var("v", TV)
_x = Poly.var("x", XY)
_y = Poly.var("y", XY)


def _require_expandable(h: RatFunc, what: str = "multiplicity series"):
    if h.variables != TV:
        raise DomainError(f"{what} must be a function of {TV}, got {h.variables}")
    if not h.expandable():
        raise DomainError(f"{what} is not expandable at the origin: denominator {h.den}")


def _univariate(a: Union[RatFunc, Poly, int, Fraction]) -> RatFunc:
    if isinstance(a, (int, Fraction)):
        return RatFunc.const(a, ("z",))
    if isinstance(a, Poly):
        a = RatFunc(a)
    if len(a.variables) != 1:
        raise DomainError("expected a rational function of one variable")
    return a


def _in_v(a: RatFunc) -> RatFunc:
    """a(z) as a function a(v) over (t, v)."""
    return substitute(a, {a.variables[0]: RatFunc.var("v", TV)})


def reconstruct(h: RatFunc) -> RatFunc:
    """The symmetric function (x h(x, xy) - y h(y, xy)) / (x - y)."""
    _require_expandable(h)
    xy = RatFunc(_x * _y)
    left = substitute(h, {"t": RatFunc(_x), "v": xy}) * RatFunc(_x)
    # right is left with x and y exchanged
    right = left.swap()
    g_den = left.den
    if right.den == g_den:
        num = left.num - right.num
        den = g_den
    else:
        num = left.num * right.den - right.num * left.den
        den = left.den * right.den
    num = exact_quotient(num, _x - _y, "factor (x - y)")
    return RatFunc(num, den)


def scale(a, h: RatFunc) -> RatFunc:
    """M'(a(xy) f) = a(v) M'(f)."""
    a = _univariate(a)
    if not a.expandable():
        raise DomainError("scalar factor is not expandable at the origin")
    _require_expandable(h)
    return _in_v(a) * h


def op_Y(h: RatFunc) -> RatFunc:
    """M'(f / ((1-x)(1-y))) from h = M'(f)."""
    return op_Ya(h, 1)


def op_Ya(h: RatFunc, a=1) -> RatFunc:
    """M'(f / ((1 - a(xy) x)(1 - a(xy) y))) from h = M'(f).

    The numerator ``t h(t, v) - a(v) v h(a(v) v, v)`` vanishes at
    ``t = a(v) v``; that cancellation is performed by exact division and a
    remainder raises ConsistencyError.
    """
    _require_expandable(h)
    a = _univariate(a)
    if not a.expandable():
        raise DomainError("a(z) is not expandable at the origin")
    a_v = _in_v(a)
    av = a_v * RatFunc(_v)
    t = RatFunc(_t)
    first = t * h
    second = av * substitute(h, {"t": av, "v": RatFunc(_v)})
    diff = first - second
    # t - a(v) v = (t * den(av) - num(av)) / den(av)
    root = _t * av.den - av.num
    num = exact_quotient(diff.num, root, "factor (t - a(v) v)")
    one_minus_at = 1 - a_v * t
    return RatFunc(num * av.den, diff.den) / one_minus_at


def thrall_base() -> RatFunc:
    """M'(1/((1-x^2)(1-xy)(1-y^2))) = 1/((1-t^2)(1-v^2))."""
    return RatFunc(Poly.const(1, TV), (1 - _t * _t) * (1 - _v * _v))


def pipeline_stages() -> dict:
    """w0 .. w4 of the stepwise computation of M'(H(T2))."""
    z = Poly.var("z", ("z",))
    w0 = thrall_base()
    w1 = op_Ya(w0, z)
    w2 = op_Y(w1)
    w3 = op_Y(w2)
    w4 = scale(RatFunc(Poly.const(1, ("z",)), 1 - z), w3)
    return {"w0": w0, "w1": w1, "w2": w2, "w3": w3, "w4": w4}


def mprime_HT2_pipeline() -> RatFunc:
    return pipeline_stages()["w4"]


# -- hard-coded closed forms -------------------------------------------------------

_FACTORS = {
    "1-v": 1 - _v,
    "1+v": 1 + _v,
    "1+v^2": 1 + _v * _v,
    "1-t": 1 - _t,
    "1+t": 1 + _t,
    "1-vt": 1 - _v * _t,
}


def _factored(exps: dict) -> Poly:
    out = Poly.const(1, TV)
    for name, k in exps.items():
        out = out * _FACTORS[name] ** k
    return out


def _v_poly(coeffs, shift: int = 0) -> Poly:
    return Poly(TV, {(0, i + shift): c for i, c in enumerate(coeffs)})


def h_polys(catalog: Catalog = CATALOG) -> dict:
    """h3(v) .. h0(v) as polynomials over (t, v)."""
    return {name: _v_poly(catalog["closed_form"][name]["coeffs"], catalog["closed_form"][name]["shift"])
            for name in ("h3", "h2", "h1", "h0")}


def mprime_HT2_closed(catalog: Catalog = CATALOG) -> RatFunc:
    """(h3 t^3 + h2 t^2 + h1 t + h0) / ((1-v)^7 (1+v)^4 (1+v^2) (1-t)^3 (1+t) (1-vt))."""
    h = h_polys(catalog)
    num = h["h3"] * _t**3 + h["h2"] * _t**2 + h["h1"] * _t + h["h0"]
    return RatFunc(num, _factored(catalog["closed_form"]["den"]))


def printed_intermediates(catalog: Catalog = CATALOG) -> dict:
    """w1, w2, w3 exactly as displayed alongside the stepwise computation."""
    v, t = _v, _t
    w1 = RatFunc(1 + v * v * t, (1 - v * v) ** 2 * (1 + v * v) * (1 - t * t) * (1 - v * t))
    w2 = RatFunc(
        -(v**2) * (v**2 - v + 1) * t**2 - v * (v**2 - 1) * t + (v**2 - v + 1),
        _factored({"1-v": 4, "1+v": 3, "1+v^2": 1, "1-t": 2, "1+t": 1, "1-vt": 1}),
    )
    h = h_polys(catalog)
    w3 = RatFunc(
        h["h3"] * t**3 + h["h2"] * t**2 + h["h1"] * t + h["h0"],
        _factored({"1-v": 6, "1+v": 4, "1+v^2": 1, "1-t": 3, "1+t": 1, "1-vt": 1}),
    )
    return {"w1": w1, "w2": w2, "w3": w3}


ELEMENTARY_POLES = {"a3": (1, 3), "a2": (1, 2), "a1": (1, 1), "b": (-1, 1), "c": ("v", 1)}


def elementary_numerator(name: str, catalog: Catalog = CATALOG) -> RatFunc:
    """a3(v), a2(v), a1(v), b(v) or c(v) as a rational function of v."""
    vs = ("v",)
    v = Poly.var("v", vs)
    spec = catalog["elementary"][name]
    factors = {"1-v": 1 - v, "1+v": 1 + v, "1+v^2": 1 + v * v}
    den = Poly.const(spec["scale"], vs)
    for k, e in spec["den"].items():
        den = den * factors[k] ** e
    return RatFunc(Poly.from_coeffs(spec["num"], "v"), den)


def mprime_HT2_elementary(catalog: Catalog = CATALOG) -> PartialFractionT:
    """a3/(1-t)^3 + a2/(1-t)^2 + a1/(1-t) + b/(1+t) + c/(1-vt)."""
    alphas = {"a3": 1, "a2": 1, "a1": 1, "b": -1, "c": "v"}
    terms = []
    for name, alpha in alphas.items():
        a = Poly.var("v", ("v",)) if alpha == "v" else Poly.const(alpha, ("v",))
        terms.append((LinearPole(a, catalog["elementary"]["poles"][name]), elementary_numerator(name, catalog)))
    return PartialFractionT(TV, tuple(terms))


def decompose_closed(catalog: Catalog = CATALOG) -> PartialFractionT:
    """Run the t-decomposition on the closed form over its known poles."""
    v = Poly.var("v", ("v",))
    return partial_fractions_t(mprime_HT2_closed(catalog), [(1, 3), (-1, 1), (v, 1)])


# -- coefficients ---------------------------------------------------------------------


@lru_cache(maxsize=16)
def _expansion(num: Poly, den: Poly, N: int) -> TruncSeries2:
    return expand(RatFunc(num, den, _reduced=True), N)


def mseries_expansion(h: RatFunc, N: int) -> TruncSeries2:
    _require_expandable(h)
    # keyed on the reduced pair: Poly equality is a dict comparison, RatFunc equality cross-multiplies
    return _expansion(h.num, h.den, N)


def mseries_coeff(h: RatFunc, p: int, q: int) -> Fraction:
    """Coefficient of t^p v^q in the Maclaurin expansion of h."""
    if p < 0 or q < 0:
        return Fraction(0)
    # round up so repeated queries share one cached expansion
    return mseries_expansion(h, max(p + q, 40)).coeff(p, q)


def multiplicity_from_series(lam, catalog: Catalog = CATALOG) -> int:
    """m_(l1,l2)(T) as the coefficient of t^(l1-l2) v^l2 in the closed form."""
    l1, l2 = lam
    m = mseries_coeff(mprime_HT2_closed(catalog), l1 - l2, l2)
    if m.denominator != 1 or m < 0:
        raise ConsistencyError(f"series coefficient {m} at {(l1, l2)} is not a multiplicity")
    return int(m)
