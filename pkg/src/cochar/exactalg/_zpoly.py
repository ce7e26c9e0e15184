"""Integer-coefficient kernels: exact division and heuristic gcd.

Polynomials are dense lists of ints, lowest degree first, trimmed. Bivariate
polynomials are lists (indexed by the major degree) of univariate lists in the
minor variable.

The gcd is the evaluate/interpolate heuristic of Char, Geddes and Gonnet: map
to integers at a large point, take the integer gcd, lift it back by balanced
base-xi digits and accept it only after trial division succeeds. A result is
therefore always a genuine common divisor; ``None`` means the heuristic gave up.
"""

from __future__ import annotations

from math import gcd, isqrt
from typing import List, Optional

ZPoly = List[int]
ZBPoly = List[ZPoly]

_ATTEMPTS = 6


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


# -- univariate ----------------------------------------------------------------


def z_content(a: ZPoly) -> int:
    return gcd(*a) if a else 0


def z_norm(a: ZPoly) -> int:
    return max((abs(c) for c in a), default=0)


def z_eval(a: ZPoly, x: int) -> int:
    r = 0
    for c in reversed(a):
        r = r * x + c
    return r


def z_sub(a: ZPoly, b: ZPoly) -> ZPoly:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def z_mul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def z_exact_div(a: ZPoly, b: ZPoly) -> Optional[ZPoly]:
    """Quotient in Z[y] when ``b`` divides ``a`` exactly, else ``None``."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [] if not r else None
    lead = b[-1]
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c, rem = divmod(r[k + db], lead)
        if rem:
            return None
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] -= c * y
    if any(r[:db]):
        return None
    return _trim(q)


def _balanced(c: int, x: int) -> int:
    g = c % x
    return g - x if g > x // 2 else g


def _interpolate1(h: int, x: int) -> ZPoly:
    out = []
    while h:
        g = _balanced(h, x)
        out.append(g)
        h = (h - g) // x
    return out


def _primitive1(a: ZPoly) -> ZPoly:
    c = z_content(a)
    if c == 0:
        return []
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


def _start_point(norm_f: int, norm_g: int, lc_f: int, lc_g: int) -> int:
    b = 2 * min(norm_f, norm_g) + 29
    return max(min(b, 99 * isqrt(b)), 2 * min(norm_f // abs(lc_f), norm_g // abs(lc_g)) + 2)


def _next_point(x: int) -> int:
    return 73794 * x * isqrt(isqrt(x)) // 27011


def _positive(a: ZPoly) -> ZPoly:
    return [-c for c in a] if a and a[-1] < 0 else list(a)


def z_gcd(f: ZPoly, g: ZPoly) -> Optional[ZPoly]:
    """Gcd in Z[y] with positive leading coefficient, or ``None`` if the heuristic fails."""
    if not f or not g:
        return _positive(f or g)
    cont = gcd(z_content(f), z_content(g))
    if len(f) == 1 or len(g) == 1:
        return [cont]
    f = [c // cont for c in f]
    g = [c // cont for c in g]
    x = _start_point(z_norm(f), z_norm(g), f[-1], g[-1])
    for _ in range(_ATTEMPTS):
        ff, gg = z_eval(f, x), z_eval(g, x)
        if ff and gg:
            h = gcd(ff, gg)
            poly = _primitive1(_interpolate1(h, x))
            if z_exact_div(f, poly) is not None and z_exact_div(g, poly) is not None:
                return [c * cont for c in poly]
            # cofactor route: lift f/gcd and recover the gcd as its cofactor
            cof = _primitive1(_interpolate1(ff // h, x))
            if cof:
                q = z_exact_div(f, cof)
                if q is not None and z_exact_div(g, q) is not None:
                    return [c * cont for c in _positive(q)]
        x = _next_point(x)
    return None


# -- bivariate ---------------------------------------------------------------------


def zb_content(a: ZBPoly) -> int:
    return gcd(*(z_content(r) for r in a)) if a else 0


def zb_norm(a: ZBPoly) -> int:
    return max((z_norm(r) for r in a), default=0)


def zb_eval_major(a: ZBPoly, x: int) -> ZPoly:
    out: ZPoly = []
    for row in reversed(a):
        out = [c * x for c in out]
        if len(out) < len(row):
            out.extend([0] * (len(row) - len(out)))
        for j, c in enumerate(row):
            out[j] += c
    return _trim(out)


def _interpolate2(h: ZPoly, x: int) -> ZBPoly:
    out: ZBPoly = []
    h = list(h)
    while h:
        g = _trim([_balanced(c, x) for c in h])
        out.append(g)
        h = _trim([(c - d) // x for c, d in zip(h, g + [0] * (len(h) - len(g)))])
    return out


def _primitive2(a: ZBPoly) -> ZBPoly:
    c = zb_content(a)
    if c == 0:
        return []
    # sign: leading coefficient of the leading row positive
    if a[-1][-1] < 0:
        c = -c
    return [[v // c for v in row] for row in a]


def zb_exact_div(a: ZBPoly, b: ZBPoly) -> Optional[ZBPoly]:
    """Quotient in Z[y][x] when ``b`` divides ``a`` exactly, else ``None``."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = [list(row) for row in a]
    _trim(r)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [] if not r else None
    lead = b[-1]
    q: ZBPoly = [[] for _ in range(len(r) - db)]
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        c = z_exact_div(r[-1], lead)
        if c is None:
            return None
        q[k] = c
        for j, row in enumerate(b):
            if row:
                r[k + j] = z_sub(r[k + j], z_mul(c, row))
        if r[-1]:
            return None
        _trim(r)
    if r:
        return None
    return _trim(q)


def zb_gcd(f: ZBPoly, g: ZBPoly) -> Optional[ZBPoly]:
    """Gcd in Z[x, y] (x major), or ``None`` if the heuristic fails."""
    if not f or not g:
        src = f or g
        return _primitive2(src) if src else []
    cont = gcd(zb_content(f), zb_content(g))
    f = [[c // cont for c in row] for row in f]
    g = [[c // cont for c in row] for row in g]
    if len(f) == 1 or len(g) == 1:
        # one side is free of x: the gcd lies in Z[y]
        acc = None
        for row in f + g:
            if row:
                acc = row if acc is None else z_gcd(acc, row)
                if acc is None:
                    return None
        return [[c * cont for c in acc]]
    x = _start_point(zb_norm(f), zb_norm(g), _lead_int(f), _lead_int(g))
    for _ in range(_ATTEMPTS):
        ff, gg = zb_eval_major(f, x), zb_eval_major(g, x)
        if ff and gg:
            h = z_gcd(ff, gg)
            if h is not None:
                poly = _primitive2(_interpolate2(h, x))
                if poly and zb_exact_div(f, poly) is not None and zb_exact_div(g, poly) is not None:
                    return [[c * cont for c in row] for row in poly]
        x = _next_point(x)
    return None


def _lead_int(a: ZBPoly) -> int:
    row = a[-1]
    return row[-1]
