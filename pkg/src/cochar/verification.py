"""Identity checks tying every closed form to an independent computation.

Each check takes a constants catalog so a deliberately corrupted copy can be
run through the same code path.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, List

from .closedform import reassemble_series, multiplicity_exact
from .constants import CATALOG, Catalog, Path
from .exactalg import Poly, RatFunc, partial_fractions_v
from .mseries import (
    elementary_numerator,
    mprime_HT2_closed,
    mprime_HT2_elementary,
    mseries_expansion,
    pipeline_stages,
    printed_intermediates,
    reconstruct,
    thrall_base,
)
from .series import XY, hilbert_T2, oracle_multiplicity, partitions_up_to


@dataclass
class CheckResult:
    key: str
    title: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} ({self.key}) {self.title}"
        return f"{text}: {self.detail}" if self.detail else text


def check_dual_form(catalog: Catalog = CATALOG, N: int = 0) -> CheckResult:
    closed = mprime_HT2_closed(catalog)
    recombined = mprime_HT2_elementary(catalog).recombine()
    ok = closed == recombined
    return CheckResult("a", "closed form equals recombined elementary fractions", ok,
                       "" if ok else f"difference {closed - recombined}")


def check_reconstruction(catalog: Catalog = CATALOG, N: int = 0) -> CheckResult:
    rec = reconstruct(mprime_HT2_closed(catalog))
    ok = rec == hilbert_T2()
    return CheckResult("b", "reconstructing the closed form gives the Hilbert series", ok,
                       "" if ok else f"got {rec}")


def check_pipeline(catalog: Catalog = CATALOG, N: int = 0) -> CheckResult:
    stages = pipeline_stages()
    printed = printed_intermediates(catalog)
    for name in ("w1", "w2", "w3"):
        if not stages[name].same_form(printed[name]):
            return CheckResult("c", "operator pipeline w0 -> w4", False,
                               f"{name} computed {stages[name]} differs from printed {printed[name]}")
    ok = stages["w4"] == mprime_HT2_closed(catalog)
    return CheckResult("c", "operator pipeline w0 -> w4", ok, "" if ok else "w4 differs from closed form")


def check_thrall(catalog: Catalog = CATALOG, N: int = 0) -> CheckResult:
    x, y = Poly.var("x", XY), Poly.var("y", XY)
    expected = RatFunc(Poly.const(1, XY), (1 - x * x) * (1 - x * y) * (1 - y * y))
    got = reconstruct(thrall_base())
    ok = got == expected
    return CheckResult("d", "Thrall base case reconstructs", ok, "" if ok else f"got {got}")


def check_v_decompositions(catalog: Catalog = CATALOG, N: int = 0) -> CheckResult:
    tables = catalog["v_decompositions"]
    for name, table in tables.items():
        pf = partial_fractions_v(elementary_numerator(name, catalog))
        expected = {(kind, k): c for kind, row in table.items() for k, c in row.items() if c}
        if pf.coefficients != expected or (pf.polynomial is not None and not pf.polynomial.is_zero()):
            diff = sorted(set(pf.coefficients.items()) ^ set(expected.items()))
            return CheckResult("e", "elementary decompositions in v", False, f"{name}: mismatch {diff[:4]}")
    return CheckResult("e", "elementary decompositions in v", True)


def check_oracle(catalog: Catalog = CATALOG, N: int = 40) -> CheckResult:
    for lam in partitions_up_to(N):
        m = multiplicity_exact(lam, catalog)
        o = oracle_multiplicity(lam)
        if m != o:
            return CheckResult("f", f"explicit formula equals oracle for l1+l2 <= {N}", False,
                               f"lambda={tuple(lam)}: formula {m}, oracle {o}")
    return CheckResult("f", f"explicit formula equals oracle for l1+l2 <= {N}", True)


def check_reassembly(catalog: Catalog = CATALOG, N: int = 30) -> CheckResult:
    got = reassemble_series(N, catalog)
    want = mseries_expansion(mprime_HT2_closed(catalog), N)
    diff = got.first_difference(want)
    title = f"coefficient series equals closed-form expansion to degree {N}"
    if diff is None:
        return CheckResult("g", title, True)
    (p, q), a, b = diff
    return CheckResult("g", title, False, f"t^{p} v^{q}: series {a}, expansion {b}")


CHECKS: List[Callable[..., CheckResult]] = [
    check_dual_form,
    check_reconstruction,
    check_pipeline,
    check_thrall,
    check_v_decompositions,
    check_oracle,
    check_reassembly,
]


CHECK_KEYS = dict(zip(CHECKS, "abcdefg"))


def run_checks(N: int, catalog: Catalog = CATALOG) -> List[CheckResult]:
    out = []
    for check in CHECKS:
        try:
            out.append(check(catalog, N))
        except ArithmeticError as exc:
            out.append(CheckResult(CHECK_KEYS[check], check.__name__, False, f"raised {exc!r}"))
    return out


# -- fault injection ----------------------------------------------------------------

FAULT_GROUPS = ("closed_form", "elementary", "coefficients")
_DETECTORS = (check_dual_form, check_reconstruction, check_oracle, check_reassembly)


def detects_fault(path: Path, delta=1, oracle_degree: int = 40, series_degree: int = 30) -> str | None:
    """Key of the first detector that fails on the perturbed catalog, else None."""
    bad = CATALOG.perturbed(path, delta)
    for check in _DETECTORS:
        N = oracle_degree if check is check_oracle else series_degree
        try:
            res = check(bad, N)
        except ArithmeticError:
            return CHECK_KEYS[check]
        if not res.ok:
            return res.key
    return None


def sample_constants(k: int, seed: int = 0, groups: Iterable[str] = FAULT_GROUPS) -> List[Path]:
    paths = list(CATALOG.leaves(*groups))
    return random.Random(seed).sample(paths, k)
