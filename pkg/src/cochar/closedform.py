"""Closed-form multiplicities m_(l1,l2)(T) and their consequences.

``multiplicity`` evaluates the explicit formula in the coordinates
``p = l1 - l2``, ``q = l2``; ``reassemble_series`` rebuilds the multiplicity
series from the same coefficient polynomials summed as four separate series,
which is the route the explicit formula is read off from.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Sequence

from .constants import CATALOG, Catalog
from .exactalg import ConsistencyError, DomainError
from .series import Partition2, TruncSeries2, as_partition


class CoeffKind(str, Enum):
    A_PLUS = "a_plus"
    A_MINUS = "a_minus"
    B_PLUS = "b_plus"
    B_MINUS = "b_minus"
    C_PLUS = "c_plus"
    C_MINUS = "c_minus"

    @property
    def arity(self) -> int:
        return 2 if self.value.startswith("a") else 1


class OutOfScopeError(DomainError):
    """The requested case lies outside the hypotheses of the closed formula."""


def _eval_blocks(blocks, args: Sequence[int]) -> Fraction:
    total = Fraction(0)
    for mono, den in blocks:
        acc = 0
        for exps, c in mono.items():
            term = c
            for a, e in zip(args, exps):
                term *= a**e
            acc += term
        total += Fraction(acc, den)
    return total


def coeff_polynomial(kind, *args: int, catalog: Catalog = CATALOG) -> Fraction:
    """Value of a+_pq, a-_pq, b+_q, b-_q, c+_s or c-_s."""
    kind = CoeffKind(kind)
    if len(args) != kind.arity:
        raise TypeError(f"{kind.value} takes {kind.arity} argument(s), got {len(args)}")
    if any(a < 0 for a in args):
        raise DomainError("arguments must be non-negative")
    return _eval_blocks(catalog["coefficients"][kind.value], args)


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def parity_flags(p: int, q: int) -> dict:
    """eps1, r, delta and (when delta = 1) eps2, w for the pair (p, q)."""
    r, eps1 = divmod(q, 2)
    flags = {"eps1": eps1, "r": r, "delta": 0, "eps2": None, "w": None}
    if q >= p:
        w, odd = divmod(q - p, 2)
        flags.update(delta=1, eps2=1 - odd, w=w)
    return flags


def multiplicity_exact(lam, catalog: Catalog = CATALOG) -> Fraction:
    """The explicit formula as an exact rational, without integrality checks."""
    lam = as_partition(lam)
    p, q = lam.p, lam.l2
    L = catalog["coefficients"]
    f = parity_flags(p, q)
    m = (
        _eval_blocks(L["a_plus"], (p, q))
        + _sign(q) * _eval_blocks(L["a_minus"], (p, q))
        + _sign(p) * _eval_blocks(L["b_plus"], (q,))
        + _sign(p + q) * _eval_blocks(L["b_minus"], (q,))
    )
    if f["eps1"]:
        m += _sign(p + f["r"]) * L["odd_correction"]
    if f["delta"]:
        s = q - p
        m += _eval_blocks(L["c_plus"], (s,)) + _sign(s) * _eval_blocks(L["c_minus"], (s,))
        if f["eps2"]:
            m += _sign(f["w"]) * L["diag_correction"]
    return m


def multiplicity(lam, catalog: Catalog = CATALOG) -> int:
    """m_(l1,l2)(T) for two generic 3x3 matrices."""
    m = multiplicity_exact(lam, catalog)
    if m.denominator != 1 or m < 0:
        raise ConsistencyError(f"closed formula gives {m} at {tuple(as_partition(lam))}")
    return int(m)


def reassemble_series(N: int, catalog: Catalog = CATALOG) -> TruncSeries2:
    """Coefficients of t^p v^q, p + q <= N, summed from the four series."""
    if N < 0:
        raise DomainError("N must be non-negative")
    L = catalog["coefficients"]
    coeffs: dict = {}

    def add(key, value):
        if value:
            coeffs[key] = coeffs.get(key, 0) + value

    for p in range(N + 1):
        for q in range(N + 1 - p):
            add((p, q), _eval_blocks(L["a_plus"], (p, q))
                + _sign(q) * _eval_blocks(L["a_minus"], (p, q))
                + _sign(p) * _eval_blocks(L["b_plus"], (q,))
                + _sign(p + q) * _eval_blocks(L["b_minus"], (q,)))
    # odd_correction * sum (-1)^(p+r) t^p v^(2r+1)
    for p in range(N + 1):
        for r in range((N - p - 1) // 2 + 1):
            if p + 2 * r + 1 <= N:
                add((p, 2 * r + 1), _sign(p + r) * L["odd_correction"])
    # sum (c+_s + (-1)^s c-_s) (tv)^p v^s
    for p in range(N // 2 + 1):
        for s in range(N - 2 * p + 1):
            add((p, p + s), _eval_blocks(L["c_plus"], (s,)) + _sign(s) * _eval_blocks(L["c_minus"], (s,)))
    # diag_correction * sum (-1)^w (tv)^p v^(2w)
    for p in range(N // 2 + 1):
        for w in range((N - 2 * p) // 2 + 1):
            add((p, p + 2 * w), _sign(w) * L["diag_correction"])
    return TruncSeries2(N, coeffs, ("t", "v"))


def asymptotic_main(lam, catalog: Catalog = CATALOG) -> Fraction:
    """Degree-7 main term of m_lambda; the remainder is O((l1 + l2)^6)."""
    lam = as_partition(lam)
    c = catalog["asymptotics"]
    d, q = lam.p, lam.l2
    val = sum((coef * d**i * q**j for coef, i, j in c["main"]), Fraction(0))
    if 2 * lam.l2 >= lam.l1:
        val -= c["fold"] * (2 * lam.l2 - lam.l1) ** 7
    return val


def quadratic_coeff_fixed_lambda2(l2: int, catalog: Catalog = CATALOG) -> Fraction:
    """Coefficient of l1^2 in m_(l1,l2) for fixed l2 and l1 > 2 l2."""
    if l2 < 0:
        raise DomainError("l2 must be non-negative")
    c = catalog["asymptotics"]
    even = sum((coef * l2**k for k, coef in c["quad_even"].items()), Fraction(0))
    alt = sum((coef * l2**k for k, coef in c["quad_alt"].items()), Fraction(0))
    return even + _sign(l2) * alt


def ordinary_multiplicity(mu: Sequence[int], catalog: Catalog = CATALOG) -> int:
    """m_mu(M_3(F)) for mu with mu_3 = ... = mu_9 >= 2."""
    mu = tuple(mu)
    if len(mu) != 9:
        raise DomainError("mu must have exactly nine parts")
    if any(a < b for a, b in zip(mu, mu[1:])) or mu[-1] < 0:
        raise DomainError("mu must be non-increasing and non-negative")
    if len(set(mu[2:])) != 1 or mu[2] < 2:
        raise OutOfScopeError(
            "formula needs mu_3 = mu_4 = ... = mu_9 >= 2; "
            f"got mu_3..mu_9 = {mu[2:]}"
        )
    return multiplicity(Partition2(mu[0] - mu[2], mu[1] - mu[2]), catalog)


def n2_mixed_multiplicity(lam: Sequence[int]) -> int:
    """m_lambda(T) for 2x2 matrices: (l1-l2+1)(l2-l3+1)(l3-l4+1), zero if l5 != 0."""
    lam = tuple(lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or (lam and lam[-1] < 0):
        raise DomainError("lambda must be non-increasing and non-negative")
    if len(lam) > 4 and any(lam[4:]):
        return 0
    l1, l2, l3, l4 = (lam + (0, 0, 0, 0))[:4]
    return (l1 - l2 + 1) * (l2 - l3 + 1) * (l3 - l4 + 1)
