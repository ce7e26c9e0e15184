from fractions import Fraction

from hypothesis import settings, strategies as st

from cochar.exactalg import Poly

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

TV = ("t", "v")


@st.composite
def polys(draw, variables=TV, max_deg=3, max_terms=5, coeff=st.integers(-5, 5)):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        exps = tuple(draw(st.integers(0, max_deg)) for _ in variables)
        terms[exps] = Fraction(draw(coeff))
    return Poly(variables, terms)


@st.composite
def nonzero_polys(draw, variables=TV, max_deg=3):
    p = draw(polys(variables, max_deg))
    return p if not p.is_zero() else p + Fraction(draw(st.integers(1, 4)))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for n in sorted(REPORT):
            terminalreporter.write_line(REPORT[n])
