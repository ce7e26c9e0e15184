from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cochar.exactalg import DomainError, Poly, RatFunc
from cochar.series import (
    XY,
    NotExpandableError,
    Partition2,
    TruncationError,
    TruncSeries2,
    coeff,
    expand,
    geometric_product,
    hilbert_T2,
    hilbert_T2_expansion,
    is_symmetric,
    oracle_multiplicity,
    partitions_up_to,
    schur,
    schur_decomposition,
    schur_multiplicity,
)

from conftest import nonzero_polys, polys

x = Poly.var("x", XY)
y = Poly.var("y", XY)
ONE = Poly.const(1, XY)


def brute_hilbert(N):
    """Coefficients of the Hilbert series by direct convolution of nine truncated geometric series."""
    factors = [(1, 0), (1, 0), (0, 1), (0, 1), (2, 0), (0, 2), (1, 1), (1, 1), (2, 1), (1, 2)]
    series = {(0, 0): 1}
    for a, b in factors:
        geo = {(a * k, b * k): 1 for k in range(N + 1) if (a + b) * k <= N}
        out = {}
        for (i, j), c in series.items():
            for (p, q), d in geo.items():
                if i + j + p + q <= N:
                    out[(i + p, j + q)] = out.get((i + p, j + q), 0) + c * d
        series = out
    return series


def test_partition_validation():
    with pytest.raises(DomainError):
        Partition2(1, 2)
    with pytest.raises(DomainError):
        Partition2(0, -1)
    lam = Partition2(5, 2)
    assert (lam.p, lam.size, tuple(lam)) == (3, 7, (5, 2))


def test_partitions_up_to_order():
    got = [tuple(lam) for lam in partitions_up_to(3)]
    assert got == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0)]
    assert len(partitions_up_to(40)) == 441


def test_hilbert_value_and_symmetry():
    h = hilbert_T2()
    assert h.evaluate({"x": 0, "y": 0}) == 1
    assert h.swap() == h
    assert h.swap().same_form(h)


def test_expand_geometric():
    s = expand(RatFunc(ONE, 1 - x), 3)
    assert dict(s.items()) == {(0, 0): 1, (1, 0): 1, (2, 0): 1, (3, 0): 1}
    s = expand(RatFunc(ONE, (1 - x) * (1 - y)), 2)
    assert dict(s.items()) == {e: 1 for e in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]}


def test_expand_rejects_pole_at_origin():
    with pytest.raises(NotExpandableError):
        expand(RatFunc(ONE, x + y), 3)


def test_coeff_examples():
    assert coeff(expand(RatFunc(ONE, 1 - x * y), 4), 2, 2) == 1
    assert coeff(expand(hilbert_T2(), 4), 0, 0) == 1
    # hand count over the geometric factors: y*(x^2 terms) 8, xy*x 4, x^2 y 1
    assert coeff(expand(hilbert_T2(), 4), 2, 1) == 13
    assert coeff(expand(hilbert_T2(), 4), 2, 1) == brute_hilbert(4)[(2, 1)]


def test_coeff_beyond_truncation():
    with pytest.raises(TruncationError):
        expand(RatFunc(ONE, 1 - x), 3).coeff(2, 2)


def test_three_expansions_of_hilbert_agree():
    N = 14
    brute = TruncSeries2(N, brute_hilbert(N))
    assert hilbert_T2_expansion(N) == brute
    assert expand(hilbert_T2(), N) == brute
    assert geometric_product([((1, 0), 2), ((0, 1), 2), ((2, 0), 1), ((0, 2), 1),
                              ((1, 1), 2), ((2, 1), 1), ((1, 2), 1)], N) == brute


@given(polys(XY, max_deg=3), nonzero_polys(XY, max_deg=2), polys(XY, max_deg=3), nonzero_polys(XY, max_deg=2))
def test_expand_is_multiplicative(a, b, c, d):
    b = b - b.constant_term() + 1
    d = d - d.constant_term() + 2
    f, g = RatFunc(a, b), RatFunc(c, d)
    assert expand(f * g, 8) == expand(f, 8) * expand(g, 8)


def test_hilbert_symmetric():
    s = hilbert_T2_expansion(30)
    assert is_symmetric(s)
    assert all(s.coeff(i, j) == s.coeff(j, i) for i in range(31) for j in range(31 - i))


def test_is_symmetric_examples():
    assert is_symmetric(expand(hilbert_T2(), 8))
    assert not is_symmetric(TruncSeries2(8, {(1, 0): 1}))
    assert is_symmetric(schur((4, 2), 8))


def test_schur_examples():
    assert dict(schur((0, 0), 3).items()) == {(0, 0): 1}
    assert dict(schur((1, 0), 3).items()) == {(1, 0): 1, (0, 1): 1}
    assert dict(schur((2, 1), 3).items()) == {(2, 1): 1, (1, 2): 1}


def test_schur_multiplicity_examples():
    s = expand(RatFunc(ONE, (1 - x) * (1 - y)), 9)
    assert all(schur_multiplicity(s, (k, 0)) == 1 for k in range(10))
    s = schur((3, 1), 6)
    assert schur_multiplicity(s, (3, 1)) == 1
    assert schur_multiplicity(s, (2, 2)) == 0
    assert schur_multiplicity(expand(hilbert_T2(), 10), (1, 1)) == 2


def test_schur_multiplicity_requires_symmetry_and_degree():
    with pytest.raises(DomainError):
        schur_multiplicity(TruncSeries2(4, {(1, 0): 1}), (1, 0))
    with pytest.raises(TruncationError):
        schur_multiplicity(schur((1, 0), 3), (3, 1))


@given(st.dictionaries(st.tuples(st.integers(0, 6), st.integers(0, 6)).filter(lambda e: e[0] >= e[1]),
                       st.integers(-4, 4), max_size=6))
def test_schur_decomposition_reconstructs(mults):
    N = 12
    s = TruncSeries2(N)
    for (l1, l2), m in mults.items():
        s = s + TruncSeries2(N, {e: m * c for e, c in schur((l1, l2), N).items()})
    dec = schur_decomposition(s)
    assert dec == {Partition2(*k): Fraction(m) for k, m in mults.items() if m}


def test_oracle_examples():
    assert oracle_multiplicity((0, 0)) == 1
    assert oracle_multiplicity((1, 0)) == 2
    # regression constants fixed from the brute-force expansion
    assert oracle_multiplicity((2, 1)) == 7
    assert oracle_multiplicity((4, 2)) == 43
    assert oracle_multiplicity((12, 5)) == 2145


def test_oracle_against_brute_convolution():
    N = 12
    brute = brute_hilbert(N)
    for lam in partitions_up_to(N):
        a = brute.get((lam.l1, lam.l2), 0)
        b = brute.get((lam.l1 + 1, lam.l2 - 1), 0) if lam.l2 else 0
        assert oracle_multiplicity(lam) == a - b


def test_oracle_integral_nonnegative():
    for lam in partitions_up_to(40):
        m = oracle_multiplicity(lam)
        assert isinstance(m, int) and m >= 0


def test_series_json_round_trip():
    s = expand(RatFunc(ONE, 3 - x + Fraction(1, 2) * y), 5)
    assert TruncSeries2.from_json(s.to_json()) == s
