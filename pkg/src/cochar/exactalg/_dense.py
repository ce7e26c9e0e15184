"""Dense univariate and bivariate kernels used by the gcd and division code.

A univariate polynomial is a list of coefficients, lowest degree first, with
no trailing zeros (the zero polynomial is ``[]``). A bivariate polynomial is a
list of univariate polynomials indexed by the degree in the major variable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

UPoly = List[Fraction]
BPoly = List[UPoly]


class InexactDivision(ArithmeticError):
    pass


def trim(a: UPoly) -> UPoly:
    while a and a[-1] == 0:
        a.pop()
    return a


def u_add(a: Sequence, b: Sequence) -> UPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def u_sub(a: Sequence, b: Sequence) -> UPoly:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def u_scale(a: Sequence, c) -> UPoly:
    if c == 0:
        return []
    return [x * c for x in a]


def u_mul(a: Sequence, b: Sequence) -> UPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def u_divmod(a: Sequence, b: Sequence) -> tuple[UPoly, UPoly]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = [Fraction(x) for x in a]
    db = len(b) - 1
    lead = Fraction(b[-1])
    if len(r) <= db:
        return [], trim(r)
    q = [Fraction(0)] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] / lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] -= c * y
    return trim(q), trim(r[:db])


def u_exact_div(a: Sequence, b: Sequence) -> UPoly:
    q, r = u_divmod(a, b)
    if r:
        raise InexactDivision("polynomial division leaves a remainder")
    return q


def u_monic(a: UPoly) -> UPoly:
    if not a:
        return []
    lead = Fraction(a[-1])
    return [Fraction(x) / lead for x in a]


def u_gcd(a: Sequence, b: Sequence) -> UPoly:
    """Monic gcd over the rationals; ``u_gcd([], []) == []``."""
    a, b = trim(list(a)), trim(list(b))
    while b:
        _, r = u_divmod(a, b)
        a, b = b, r
    return u_monic(a)


# -- bivariate: list indexed by major degree of minor-variable UPolys ---------


def b_trim(a: BPoly) -> BPoly:
    while a and not a[-1]:
        a.pop()
    return a


def b_content(a: BPoly) -> UPoly:
    g: UPoly = []
    for c in a:
        if c:
            g = u_gcd(g, c)
            if len(g) == 1:
                break
    return g


def b_div_minor(a: BPoly, c: UPoly) -> BPoly:
    return [u_exact_div(x, c) if x else [] for x in a]


def b_mul_minor(a: BPoly, c: UPoly) -> BPoly:
    return b_trim([u_mul(x, c) for x in a])


def b_mul(a: BPoly, b: BPoly) -> BPoly:
    if not a or not b:
        return []
    out: BPoly = [[] for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = u_add(out[i + j], u_mul(x, y))
    return b_trim(out)


def b_prem(a: BPoly, b: BPoly) -> BPoly:
    """Pseudo-remainder of ``a`` by ``b`` in the major variable."""
    r = [list(x) for x in a]
    db = len(b) - 1
    lead = b[-1]
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        rl = r[-1]
        r = [u_mul(x, lead) for x in r]
        for j, y in enumerate(b):
            r[k + j] = u_sub(r[k + j], u_mul(rl, y))
        b_trim(r)
    return r


def b_primitive(a: BPoly) -> tuple[UPoly, BPoly]:
    c = b_content(a)
    if not c:
        return [], []
    return c, b_div_minor(a, c)


def b_gcd(a: BPoly, b: BPoly) -> BPoly:
    """Gcd in Q[minor][major] via the primitive remainder sequence.

    The result is defined up to a rational scalar.
    """
    a, b = b_trim([list(x) for x in a]), b_trim([list(x) for x in b])
    if not a:
        return b
    if not b:
        return a
    ca, pa = b_primitive(a)
    cb, pb = b_primitive(b)
    c = u_gcd(ca, cb)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while len(pb) > 1:
        r = b_prem(pa, pb)
        if not r:
            break
        pa = pb
        _, pb = b_primitive(r)
    else:
        # pb has degree 0 in the major variable: primitive part is a unit
        return [c]
    return b_mul_minor(pb, c)


def b_exact_div(a: BPoly, b: BPoly) -> BPoly:
    """Exact quotient ``a / b``; raises InexactDivision otherwise."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = [list(x) for x in a]
    b_trim(r)
    db = len(b) - 1
    lead = b[-1]
    if len(r) - 1 < db:
        if r:
            raise InexactDivision("polynomial division leaves a remainder")
        return []
    q: BPoly = [[] for _ in range(len(r) - db)]
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        c = u_exact_div(r[-1], lead)
        q[k] = c
        for j, y in enumerate(b):
            r[k + j] = u_sub(r[k + j], u_mul(c, y))
        if r[-1]:
            raise InexactDivision("polynomial division leaves a remainder")
        b_trim(r)
    if r:
        raise InexactDivision("polynomial division leaves a remainder")
    return b_trim(q)
