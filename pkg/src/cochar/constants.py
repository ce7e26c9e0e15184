"""Every hard-coded constant of the closed forms, transcribed exactly once.

The catalog is a nested structure of dicts and lists whose leaves are
integers or Fractions. Code that evaluates a closed form takes a ``Catalog``
argument (default: ``CATALOG``) so that a perturbed copy can be substituted
to confirm the verification checks notice the change.

Groups:

``closed_form``       numerator polynomials h3..h0 of M'(H(T2)) and the
                      multiplicities of its denominator factors
``elementary``        the five elementary-fraction numerators a3, a2, a1, b, c as
                      (numerator coefficients, scalar, denominator multiplicities)
``coefficients``      the coefficient polynomials a+, a-, b+, b-, c+, c- as lists
                      of blocks ``[numerator monomials, denominator]`` and the
                      two 1/64 parity corrections
``v_decompositions``  decompositions of a3, a2, a1, b, c over the basis in v
``asymptotics``       the asymptotic main term and the fixed-lambda2 quadratic
                      coefficient
"""

from __future__ import annotations

import copy
from fractions import Fraction as F
from math import factorial
from typing import Any, Iterator, Tuple

Path = Tuple[Any, ...]

_RAW = {
    "closed_form": {
        # polynomial = v^shift * sum(coeffs[i] v^i)
        "h3": {"shift": 2, "coeffs": [1, -1, 3, -1, 1]},
        "h2": {"shift": 1, "coeffs": [-1, -1, 1, -4, 2]},
        "h1": {"shift": 1, "coeffs": [2, -4, 1, -1, -1]},
        "h0": {"shift": 0, "coeffs": [1, -1, 3, -1, 1]},
        "den": {"1-v": 7, "1+v": 4, "1+v^2": 1, "1-t": 3, "1+t": 1, "1-vt": 1},
    },
    "elementary": {
        "a3": {"num": [1], "scale": 2, "den": {"1-v": 6, "1+v": 2}},
        "a2": {"num": [1, -2, 3], "scale": 2**2, "den": {"1-v": 7, "1+v": 3}},
        "a1": {"num": [1, -6, 14, -6, 1], "scale": 2**3, "den": {"1-v": 8, "1+v": 4}},
        "b": {"num": [1], "scale": 2**3, "den": {"1-v": 2, "1+v": 4, "1+v^2": 1}},
        "c": {"num": [0, 0, 0, 0, -1], "scale": 1, "den": {"1-v": 8, "1+v": 4, "1+v^2": 1}},
        # pole order in t of each numerator
        "poles": {"a3": 3, "a2": 2, "a1": 1, "b": 1, "c": 1},
    },
    "coefficients": {
        # monomial keys are exponents of (p, q)
        "a_plus": [
            [{(2, 5): 84, (1, 6): 14, (0, 7): 1}, 2**5 * factorial(7)],
            [{(2, 4): 40, (1, 5): 12, (0, 6): 1}, 2**5 * factorial(5)],
            [{(2, 3): 90, (1, 4): 49, (0, 5): 5}, 2**7 * 3**2],
            [{(2, 2): 104, (1, 3): 108, (0, 4): 15}, 2**7 * 3],
            [{(2, 1): 19596, (1, 2): 43666, (0, 3): 9599}, 2**6 * factorial(6)],
            [{(2, 0): 1800, (1, 1): 11676, (0, 2): 4993}, 2**6 * factorial(5)],
            [{(1, 0): 9492, (0, 1): 11437}, 2**9 * 3 * 7],
            [{(0, 0): 43}, 64],
        ],
        "a_minus": [
            [{(2, 1): 12, (1, 2): 18, (0, 3): 7}, 2**10 * 3],
            [{(2, 0): 8, (1, 1): 28, (0, 2): 17}, 2**9],
            [{(1, 0): 180, (0, 1): 229}, 2**9 * 3],
            [{(0, 0): 13}, 64],
        ],
        # keys are exponents of q
        "b_plus": [[{(1,): 1, (0,): 4}, 2**8]],
        "b_minus": [[{(3,): 2, (2,): 24, (1,): 85, (0,): 84}, 2**8 * 3]],
        # keys are exponents of s
        "c_plus": [
            [{(7,): -1}, 2**5 * factorial(7)],
            [{(6,): -1}, 2**6 * factorial(5)],
            [{(5,): -19}, 2**5 * factorial(6)],
            [{(4,): -1}, 2**8 * factorial(3)],
            [{(3,): 391}, 2**6 * factorial(6)],
            [{(2,): 79}, 2**10 * 5],
            [{(1,): -1453}, 2**7 * factorial(5) * 7],
            [{(0,): -17}, 2**10],
        ],
        "c_minus": [[{(3,): -1, (2,): -9, (1,): -17, (0,): 3}, 2**10 * 3]],
        # -1/64 sum (-1)^(p+r) t^p v^(2r+1) and +1/64 sum (-1)^w (tv)^p v^(2w)
        "odd_correction": F(-1, 64),
        "diag_correction": F(1, 64),
    },
    "v_decompositions": {
        "a3": {
            "1-v": {6: F(1, 8), 5: F(1, 8), 4: F(3, 32), 3: F(1, 16), 2: F(5, 128), 1: F(3, 128)},
            "1+v": {2: F(1, 128), 1: F(3, 128)},
        },
        "a2": {
            "1-v": {7: F(1, 16), 6: F(-1, 32), 4: F(1, 32), 3: F(11, 256), 2: F(21, 512),
                    1: F(17, 512)},
            "1+v": {3: F(3, 256), 2: F(13, 512), 1: F(17, 512)},
        },
        "a1": {
            "1-v": {8: F(1, 32), 6: F(-1, 32), 5: F(-1, 32), 4: F(-5, 512), 3: F(3, 256),
                    2: F(25, 1024), 1: F(29, 1024)},
            "1+v": {4: F(7, 512), 3: F(7, 256), 2: F(33, 1024), 1: F(29, 1024)},
        },
        "b": {
            "1-v": {2: F(1, 256), 1: F(3, 256)},
            "1+v": {4: F(1, 64), 3: F(1, 32), 2: F(9, 256), 1: F(7, 256)},
            "v/1+v^2": {1: F(-1, 64)},
        },
        "c": {
            "1-v": {8: F(-1, 32), 7: F(1, 32), 6: F(1, 32), 4: F(-11, 512), 3: F(-11, 512),
                    2: F(-9, 1024), 1: F(1, 256)},
            "1+v": {4: F(-1, 512), 3: F(-1, 512), 2: F(1, 1024), 1: F(1, 256)},
            "1+v^2": {1: F(1, 64)},
        },
    },
    "asymptotics": {
        # (coefficient, power of (l1 - l2), power of l2)
        "main": [
            [F(1, factorial(7) * 2**5), 0, 7],
            [F(1, factorial(6) * 2**4), 1, 6],
            [F(1, factorial(5) * 2**4), 2, 5],
        ],
        # subtracted when 2*l2 >= l1: (2 l2 - l1)^7 / (7! 2^5)
        "fold": F(1, factorial(7) * 2**5),
        # coefficient of l1^2 for fixed l2: sum c_k l2^k + (-1)^l2 sum d_k l2^k
        "quad_even": {5: F(1, factorial(5) * 2**4), 4: F(1, 2**5 * 3), 3: F(5, 2**6),
                      2: F(13, factorial(4) * 2), 1: F(1633, factorial(5) * 2**5), 0: F(15, 2**6)},
        "quad_alt": {1: F(1, 2**8), 0: F(1, 2**6)},
    },
}


class Catalog:
    """Read-only view of the constants with path-based perturbation."""

    def __init__(self, data=None):
        self._data = copy.deepcopy(_RAW if data is None else data)

    def __getitem__(self, key):
        return self._data[key]

    def get(self, path: Path):
        node = self._data
        for k in path:
            node = node[k]
        return node

    def leaves(self, *groups: str) -> Iterator[Path]:
        """Paths of every scalar constant in the given top-level groups."""
        for g in groups or tuple(self._data):
            yield from _walk(self._data[g], (g,))

    def perturbed(self, path: Path, delta=1) -> "Catalog":
        data = copy.deepcopy(self._data)
        node = data
        for k in path[:-1]:
            node = node[k]
        node[path[-1]] = node[path[-1]] + delta
        return Catalog(data)


def _walk(node, path: Path) -> Iterator[Path]:
    if isinstance(node, dict):
        for k, v in node.items():
            yield from _walk(v, path + (k,))
    elif isinstance(node, list):
        for i, v in enumerate(node):
            yield from _walk(v, path + (i,))
    else:
        yield path


CATALOG = Catalog()
