from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from cochar.exactalg import (
    ConsistencyError,
    DomainError,
    FactorizationError,
    InexactDivision,
    Poly,
    RatFunc,
    binomial_series_coeff,
    exact_quotient,
    format_rational,
    normalize,
    parse_rational,
    partial_fractions_t,
    partial_fractions_v,
    poly_exact_div,
    poly_gcd,
    substitute,
)
from cochar.mseries import mprime_HT2_closed, printed_intermediates
from cochar.series import expand

from conftest import TV, nonzero_polys, polys

t = Poly.var("t", TV)
v = Poly.var("v", TV)
V = ("v",)
vv = Poly.var("v", V)


def to_sympy(p: Poly):
    syms = sympy.symbols(p.variables)
    return sum((sympy.Rational(c.numerator, c.denominator) * sympy.prod([s**e for s, e in zip(syms, exps)])
                for exps, c in p.items()), sympy.Integer(0))


# -- rationals and polynomials ------------------------------------------------


@pytest.mark.parametrize("q", [Fraction(0), Fraction(5), Fraction(-3, 7), Fraction(123456789, 1000)])
def test_rational_text_round_trip(q):
    assert parse_rational(format_rational(q)) == q
    if q.denominator == 1:
        assert "/" not in format_rational(q)


def test_poly_json_round_trip():
    p = 3 * t**2 * v - Fraction(1, 2) * v + 7
    assert Poly.from_json(p.to_json()) == p


def test_poly_zero_coefficients_dropped():
    assert Poly(TV, {(1, 0): 0}).is_zero()


@given(polys(), polys(), polys())
def test_poly_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a - a == Poly(TV)


@given(nonzero_polys(), nonzero_polys())
def test_gcd_matches_sympy(a, b):
    g = poly_gcd(a, b)
    ref = sympy.gcd(to_sympy(a), to_sympy(b))
    assert sympy.simplify(to_sympy(g) / ref).is_number


@given(nonzero_polys(), nonzero_polys())
def test_exact_division(a, b):
    assert poly_exact_div(a * b, b) == a


def test_inexact_division_raises():
    with pytest.raises(InexactDivision):
        poly_exact_div(t**2 + 1, t - 1)


def test_exact_quotient_reports_consistency_error():
    with pytest.raises(ConsistencyError):
        exact_quotient(t**2 + v, t - v, "factor (t - v)")


# -- normalize -----------------------------------------------------------------


def test_normalize_difference_of_squares():
    f = normalize(t**2 - v**2, t - v)
    assert f.same_form(RatFunc(t + v))
    assert f.den == Poly.const(1, TV)


def test_normalize_content():
    f = normalize(2 * t, Poly.const(4, TV))
    assert f == RatFunc(t, Poly.const(2, TV))
    assert f.same_form(RatFunc(Fraction(1, 2) * t))


def test_normalize_cancels_common_factor_of_closed_form():
    h = mprime_HT2_closed()
    g = normalize(h.num * (1 - t), h.den * (1 - t))
    assert g.same_form(h)


def test_denominator_sign_normalization():
    f = RatFunc(Poly.const(1, TV), -1 + t)
    assert f.den.least_term()[1] > 0
    assert f.same_form(RatFunc(Poly.const(-1, TV), 1 - t))


@given(polys(), nonzero_polys())
def test_normalize_idempotent(n, d):
    f = normalize(n, d)
    assert normalize(f.num, f.den).same_form(f)


@given(polys(), nonzero_polys(), polys(), nonzero_polys())
def test_field_identities(a, b, c, d):
    f, g = RatFunc(a, b), RatFunc(c, d)
    assert f + g - g == f
    if not g.is_zero():
        assert f * g / g == f


@given(polys(max_deg=2), nonzero_polys(max_deg=2))
def test_reduction_matches_sympy_cancel(n, d):
    f = RatFunc(n, d)
    ours = to_sympy(f.num) / to_sympy(f.den)
    assert sympy.simplify(ours - to_sympy(n) / to_sympy(d)) == 0
    _, ref_den = sympy.fraction(sympy.cancel(to_sympy(n) / to_sympy(d)))
    assert sympy.Poly(to_sympy(f.den), *sympy.symbols(TV)).total_degree() == \
        sympy.Poly(ref_den, *sympy.symbols(TV)).total_degree()


# -- substitute ------------------------------------------------------------------


def test_substitute_single_variable():
    f = RatFunc(Poly.const(1, ("t",)), 1 - Poly.var("t", ("t",)))
    g = substitute(f, {"t": RatFunc.var("v", V)})
    assert g == RatFunc(Poly.const(1, V), 1 - vv)


def test_substitute_into_two_variables():
    XY = ("x", "y")
    x, y = Poly.var("x", XY), Poly.var("y", XY)
    f = RatFunc(Poly.const(1, TV), (1 - t**2) * (1 - v**2))
    g = substitute(f, {"t": RatFunc(x), "v": RatFunc(x * y)})
    assert g == RatFunc(Poly.const(1, XY), (1 - x**2) * (1 - x**2 * y**2))


def test_substitute_w1_on_diagonal():
    w1 = printed_intermediates()["w1"]
    got = substitute(w1, {"t": RatFunc.var("v", TV)})
    hand = RatFunc(1 + v**3, (1 - v**2) ** 2 * (1 + v**2) * (1 - v**2) * (1 - v**2))
    assert got == hand
    assert expand(got, 20) == expand(hand, 20)


@given(polys(max_deg=2), nonzero_polys(max_deg=2))
def test_substitute_fresh_round_trip(n, d):
    f = RatFunc(n, d)
    S = ("s", "v")
    there = substitute(f, {"t": RatFunc.var("s", S), "v": RatFunc.var("v", S)})
    back = substitute(there, {"s": RatFunc.var("t", TV), "v": RatFunc.var("v", TV)})
    assert back == f


def test_substitute_zero_denominator():
    f = RatFunc(Poly.const(1, TV), t - v)
    with pytest.raises(DomainError):
        substitute(f, {"t": RatFunc.var("v", TV)})


# -- binomial series ----------------------------------------------------------------


def test_binomial_series_examples():
    assert binomial_series_coeff(0, 9) == 1
    assert binomial_series_coeff(1, 3) == 4
    assert binomial_series_coeff(5, 7) == 792


def test_binomial_series_against_division():
    for k in range(13):
        s = expand(RatFunc(Poly.const(1, TV), (1 - t) ** (k + 1)), 12)
        for m in range(13):
            assert binomial_series_coeff(k, m) == s.coeff(m, 0)


# -- partial fractions in t ---------------------------------------------------------


def test_pf_t_two_simple_poles():
    f = RatFunc(Poly.const(1, TV), (1 - t) * (1 + t))
    pf = partial_fractions_t(f, [(1, 1), (-1, 1)])
    assert pf.coefficient(1, 1) == RatFunc.const(Fraction(1, 2), V)
    assert pf.coefficient(-1, 1) == RatFunc.const(Fraction(1, 2), V)
    assert pf.recombine() == f


def test_pf_t_closed_form_gives_elementary_terms():
    pf = partial_fractions_t(mprime_HT2_closed(), [(1, 3), (-1, 1), (vv, 1)])
    a3 = pf.coefficient(1, 3)
    assert a3 == RatFunc(Poly.const(1, V), 2 * (1 - vv) ** 6 * (1 + vv) ** 2)
    assert pf.recombine() == mprime_HT2_closed()


def test_pf_t_w2_recombines():
    w2 = printed_intermediates()["w2"]
    pf = partial_fractions_t(w2, [(1, 2), (-1, 1), (vv, 1)])
    assert pf.recombine() == w2
    assert {(str(p.alpha), p.power) for p, _ in pf.terms} <= {("1", 2), ("1", 1), ("-1", 1), ("v", 1)}


def test_pf_t_rejects_wrong_factors():
    f = RatFunc(Poly.const(1, TV), (1 - t) * (1 - 2 * t))
    with pytest.raises(FactorizationError):
        partial_fractions_t(f, [(1, 1)])


def test_pf_t_rejects_improper():
    f = RatFunc(t**2, 1 - t)
    with pytest.raises(DomainError):
        partial_fractions_t(f, [(1, 1)])


def _multiplicity(den: Poly, factor: Poly) -> int:
    k = 0
    while True:
        try:
            den = poly_exact_div(den, factor)
        except InexactDivision:
            return k
        k += 1


@given(polys(max_deg=2), st.integers(1, 3), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_pf_t_round_trip(num, a, b, c, e):
    num = Poly(TV, {k: x for k, x in num.items() if k[0] < a})
    f = RatFunc(num, (1 - t) ** a * (1 + t) ** b * (1 - v * t) ** c * (1 - v) ** e)
    factors = [(alpha, m) for alpha, m in ((1, _multiplicity(f.den, 1 - t)),
                                           (-1, _multiplicity(f.den, 1 + t)),
                                           (vv, _multiplicity(f.den, 1 - v * t))) if m]
    if not factors:
        return
    assert partial_fractions_t(f, factors).recombine() == f


# -- partial fractions in v -----------------------------------------------------------


A3_EXPECTED = {
    ("1-v", 6): Fraction(1, 8), ("1-v", 5): Fraction(1, 8), ("1-v", 4): Fraction(3, 32),
    ("1-v", 3): Fraction(1, 16), ("1-v", 2): Fraction(5, 128), ("1-v", 1): Fraction(3, 128),
    ("1+v", 2): Fraction(1, 128), ("1+v", 1): Fraction(3, 128),
}


def test_pf_v_a3_literal():
    a3 = RatFunc(Poly.const(1, V), 2 * (1 - vv) ** 6 * (1 + vv) ** 2)
    pf = partial_fractions_v(a3)
    assert pf.coefficients == A3_EXPECTED
    assert pf.polynomial is None


def test_pf_v_b_has_quadratic_term():
    b = RatFunc(Poly.const(1, V), 8 * (1 - vv) ** 2 * (1 + vv) ** 4 * (1 + vv**2))
    assert partial_fractions_v(b).get("v/1+v^2", 1) == Fraction(-1, 64)


def test_pf_v_simple():
    pf = partial_fractions_v(RatFunc(Poly.const(1, V), 1 - vv**2))
    assert pf.coefficients == {("1-v", 1): Fraction(1, 2), ("1+v", 1): Fraction(1, 2)}


def test_pf_v_rejects_other_factors():
    with pytest.raises(FactorizationError):
        partial_fractions_v(RatFunc(Poly.const(1, V), 1 - 2 * vv))


@given(polys(variables=V, max_deg=8, max_terms=9), st.integers(0, 3), st.integers(0, 3), st.integers(0, 2))
def test_pf_v_round_trip(num, a, b, c):
    den = (1 - vv) ** a * (1 + vv) ** b * (1 + vv**2) ** c
    f = RatFunc(num, den)
    assert partial_fractions_v(f).recombine() == f
