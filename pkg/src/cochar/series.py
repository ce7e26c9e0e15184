"""Truncated bivariate power series, Schur functions and the brute-force oracle.

The oracle expands the Hilbert series of the mixed trace algebra of two
generic 3x3 matrices straight from its product of geometric factors and reads
multiplicities off with the difference formula
``m(l1, l2) = a(l1, l2) - a(l1 + 1, l2 - 1)``. It never touches the closed
forms it is used to check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .exactalg import DomainError, Poly, RatFunc, format_rational, parse_rational

XY = ("x", "y")
DEFAULT_ORACLE_DEGREE = 40


class TruncationError(IndexError):
    """A coefficient beyond the truncation degree was requested."""


class NotExpandableError(DomainError):
    """The denominator vanishes at the origin."""


@dataclass(frozen=True, order=True)
class Partition2:
    l1: int
    l2: int

    def __post_init__(self):
        if not (isinstance(self.l1, int) and isinstance(self.l2, int)):
            raise DomainError("partition parts must be integers")
        if not self.l1 >= self.l2 >= 0:
            raise DomainError(f"({self.l1}, {self.l2}) is not a partition: need l1 >= l2 >= 0")

    @property
    def p(self) -> int:
        return self.l1 - self.l2

    @property
    def size(self) -> int:
        return self.l1 + self.l2

    def __iter__(self):
        return iter((self.l1, self.l2))


def as_partition(lam) -> Partition2:
    return lam if isinstance(lam, Partition2) else Partition2(*lam)


def partitions_up_to(n: int) -> list[Partition2]:
    """All two-part partitions with l1 + l2 <= n, sorted by (size, l1)."""
    out = []
    for k in range(n + 1):
        for l1 in range((k + 1) // 2, k + 1):
            out.append(Partition2(l1, k - l1))
    return out


class TruncSeries2:
    """Bivariate series truncated at total degree ``N`` (``i + j <= N``)."""

    __slots__ = ("N", "_coeffs", "variables")

    def __init__(self, N: int, coeffs: Mapping[Tuple[int, int], object] = (),
                 variables: Sequence[str] = XY):
        if N < 0:
            raise DomainError("truncation degree must be non-negative")
        self.N = N
        self.variables = tuple(variables)
        clean = {}
        for (i, j), c in dict(coeffs).items():
            if i < 0 or j < 0:
                raise DomainError("negative exponent")
            if i + j <= N and c:
                clean[(i, j)] = Fraction(c)
        self._coeffs = clean

    @classmethod
    def from_poly(cls, p: Poly, N: int) -> "TruncSeries2":
        if len(p.variables) != 2:
            raise DomainError("expected a bivariate polynomial")
        return cls(N, dict(p.items()), p.variables)

    def coeff(self, i: int, j: int) -> Fraction:
        if i < 0 or j < 0:
            return Fraction(0)
        if i + j > self.N:
            raise TruncationError(f"coefficient ({i}, {j}) lies beyond truncation degree {self.N}")
        return self._coeffs.get((i, j), Fraction(0))

    def items(self):
        return self._coeffs.items()

    def truncate(self, N: int) -> "TruncSeries2":
        return TruncSeries2(min(N, self.N), self._coeffs, self.variables)

    def _check(self, other: "TruncSeries2"):
        if other.variables != self.variables:
            raise DomainError("variable mismatch")

    def __add__(self, other: "TruncSeries2") -> "TruncSeries2":
        self._check(other)
        n = min(self.N, other.N)
        out = dict(self.truncate(n)._coeffs)
        for k, c in other._coeffs.items():
            if sum(k) <= n:
                out[k] = out.get(k, 0) + c
        return TruncSeries2(n, out, self.variables)

    def __neg__(self) -> "TruncSeries2":
        return TruncSeries2(self.N, {k: -c for k, c in self._coeffs.items()}, self.variables)

    def __sub__(self, other: "TruncSeries2") -> "TruncSeries2":
        return self + (-other)

    def __mul__(self, other) -> "TruncSeries2":
        if isinstance(other, (int, Fraction)):
            return TruncSeries2(self.N, {k: c * other for k, c in self._coeffs.items()}, self.variables)
        self._check(other)
        n = min(self.N, other.N)
        out: Dict[Tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._coeffs.items():
            if i1 + j1 > n:
                continue
            for (i2, j2), c2 in other._coeffs.items():
                if i1 + j1 + i2 + j2 <= n:
                    k = (i1 + i2, j1 + j2)
                    out[k] = out.get(k, 0) + c1 * c2
        return TruncSeries2(n, out, self.variables)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries2):
            return NotImplemented
        return (self.N, self.variables, self._coeffs) == (other.N, other.variables, other._coeffs)

    def agrees_with(self, other: "TruncSeries2", degree: int | None = None) -> bool:
        """Coefficient-wise equality through ``degree`` (default: common truncation)."""
        n = min(self.N, other.N) if degree is None else degree
        keys = {k for k in self._coeffs if sum(k) <= n} | {k for k in other._coeffs if sum(k) <= n}
        return all(self.coeff(*k) == other.coeff(*k) for k in keys)

    def first_difference(self, other: "TruncSeries2", degree: int | None = None):
        n = min(self.N, other.N) if degree is None else degree
        for d in range(n + 1):
            for i in range(d + 1):
                a, b = self.coeff(i, d - i), other.coeff(i, d - i)
                if a != b:
                    return (i, d - i), a, b
        return None

    def __repr__(self) -> str:
        return f"TruncSeries2(N={self.N}, terms={len(self._coeffs)})"

    def to_json(self) -> dict:
        terms = sorted(self._coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0][0]))
        return {"N": self.N, "terms": [[i, j, format_rational(c)] for (i, j), c in terms]}

    @classmethod
    def from_json(cls, data) -> "TruncSeries2":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["N"], {(i, j): parse_rational(c) for i, j, c in data["terms"]})


def coeff(s: TruncSeries2, i: int, j: int) -> Fraction:
    return s.coeff(i, j)


# -- expansion -----------------------------------------------------------------


def expand(f: RatFunc, N: int) -> TruncSeries2:
    """Maclaurin coefficients of a bivariate rational function through degree N."""
    if len(f.variables) != 2:
        raise DomainError("expand works on bivariate rational functions")
    d0 = f.den.constant_term()
    if d0 == 0:
        raise NotExpandableError(f"denominator {f.den} vanishes at the origin")
    den = [(e, c) for e, c in f.den.items() if any(e) and sum(e) <= N]
    num = dict(f.num.items())
    inv = 1 / d0
    out: Dict[Tuple[int, int], Fraction] = {}
    for d in range(N + 1):
        for i in range(d + 1):
            j = d - i
            acc = num.get((i, j), 0)
            for (a, b), c in den:
                prev = out.get((i - a, j - b))
                if prev is not None:
                    acc -= c * prev
            if acc:
                out[(i, j)] = acc * inv
    return TruncSeries2(N, out, f.variables)


def geometric_product(factors: Iterable[Tuple[Tuple[int, int], int]], N: int,
                      variables: Sequence[str] = XY) -> TruncSeries2:
    """Expand ``prod 1/(1 - x^a y^b)^k`` factor by factor.

    Each factor multiplies the running series by ``1/(1 - m)``, which is the
    in-place prefix sum ``s[e] += s[e - m]`` over increasing degree.
    """
    s: Dict[Tuple[int, int], int] = {(0, 0): 1}
    for (a, b), k in factors:
        if a + b == 0:
            raise NotExpandableError("constant geometric factor")
        for _ in range(k):
            for d in range(a + b, N + 1):
                for i in range(d + 1):
                    j = d - i
                    prev = s.get((i - a, j - b))
                    if prev:
                        s[(i, j)] = s.get((i, j), 0) + prev
    return TruncSeries2(N, s, variables)


# the nine geometric factors of the Hilbert series: exponent of x^a y^b, multiplicity
HILBERT_T2_FACTORS: Tuple[Tuple[Tuple[int, int], int], ...] = (
    ((1, 0), 2),
    ((0, 1), 2),
    ((2, 0), 1),
    ((0, 2), 1),
    ((1, 1), 2),
    ((2, 1), 1),
    ((1, 2), 1),
)


def hilbert_T2() -> RatFunc:
    """1/((1-x)^2 (1-y)^2 (1-x^2)(1-y^2)(1-xy)^2 (1-x^2 y)(1-x y^2))."""
    den = Poly.const(1, XY)
    for exps, k in HILBERT_T2_FACTORS:
        den = den * (1 - Poly.monomial(exps, XY)) ** k
    return RatFunc(Poly.const(1, XY), den)


@lru_cache(maxsize=8)
def hilbert_T2_expansion(N: int) -> TruncSeries2:
    return geometric_product(HILBERT_T2_FACTORS, N)


# -- Schur functions -------------------------------------------------------------


def schur(lam, N: int) -> TruncSeries2:
    """S_(l1,l2)(x, y) = (xy)^l2 (x^p + x^(p-1) y + ... + y^p), p = l1 - l2."""
    lam = as_partition(lam)
    if lam.l1 > N:
        raise DomainError(f"schur needs l1 <= N, got l1={lam.l1}, N={N}")
    return TruncSeries2(N, {(lam.l2 + k, lam.l1 - k): 1 for k in range(lam.p + 1)})


def is_symmetric(s: TruncSeries2) -> bool:
    return all(s.coeff(j, i) == c for (i, j), c in s.items())


def schur_multiplicity(s: TruncSeries2, lam) -> Fraction:
    """Multiplicity of S_lambda in the symmetric series ``s``."""
    lam = as_partition(lam)
    if not is_symmetric(s):
        raise DomainError("schur_multiplicity needs a symmetric series")
    if lam.size > s.N:
        raise TruncationError(f"partition {tuple(lam)} needs truncation degree {lam.size}, have {s.N}")
    a = s.coeff(lam.l1, lam.l2)
    if lam.l2 == 0:
        return a
    return a - s.coeff(lam.l1 + 1, lam.l2 - 1)


def oracle_multiplicity(lam) -> int:
    """m_(l1,l2)(T) by brute-force expansion of the Hilbert series."""
    lam = as_partition(lam)
    N = max(lam.size, DEFAULT_ORACLE_DEGREE)
    m = schur_multiplicity(hilbert_T2_expansion(N), lam)
    if m.denominator != 1 or m < 0:
        raise ArithmeticError(f"oracle produced {m} at {tuple(lam)}")
    return int(m)


def schur_decomposition(s: TruncSeries2) -> Dict[Partition2, Fraction]:
    """All multiplicities readable from ``s`` (partitions of size <= N)."""
    return {lam: m for lam in partitions_up_to(s.N) if (m := schur_multiplicity(s, lam))}
