"""Command-line interface: ``cochar mult | table | verify | asym | ordinary | forms``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 I/O error. Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence

from . import __version__
from .closedform import (
    asymptotic_main,
    multiplicity,
    multiplicity_exact,
    ordinary_multiplicity,
)
from .constants import CATALOG, Catalog
from .exactalg import format_rational
from .mseries import mprime_HT2_closed, mprime_HT2_elementary, multiplicity_from_series
from .series import Partition2, hilbert_T2, oracle_multiplicity, partitions_up_to
from .verification import run_checks

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
METHODS = ("closed", "oracle", "series")
DECIMAL_DIGITS = 12


class UsageError(Exception):
    pass


def compute(l1: int, l2: int, method: str = "closed", catalog: Catalog = CATALOG) -> int:
    lam = Partition2(l1, l2)
    if method == "closed":
        return multiplicity(lam, catalog)
    if method == "oracle":
        return oracle_multiplicity(lam)
    if method == "series":
        return multiplicity_from_series(lam, catalog)
    raise UsageError(f"unknown method {method!r}")


def _record(l1: int, l2: int, value: int) -> dict:
    return {"lambda1": l1, "lambda2": l2, "multiplicity": value}


def _decimal(x: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    sign = "-" if x < 0 else ""
    x = abs(x)
    whole, rest = divmod(x.numerator, x.denominator)
    frac = rest * 10**digits // x.denominator
    return f"{sign}{whole}.{frac:0{digits}d}"


def _partition_arg(l1: int, l2: int) -> Partition2:
    if l2 < 0 or l1 < l2:
        raise UsageError(f"need lambda1 >= lambda2 >= 0, got ({l1}, {l2})")
    return Partition2(l1, l2)


# -- table -----------------------------------------------------------------------


def _table_chunk(args) -> List[dict]:
    pairs, method = args
    return [_record(l1, l2, compute(l1, l2, method)) for l1, l2 in pairs]


def table_records(N: int, method: str = "closed", jobs: int = 1, catalog: Catalog = CATALOG) -> List[dict]:
    if N < 0:
        raise UsageError("--degree must be non-negative")
    pairs = [(lam.l1, lam.l2) for lam in partitions_up_to(N)]
    if jobs <= 1 or catalog is not CATALOG:
        return [_record(l1, l2, compute(l1, l2, method, catalog)) for l1, l2 in pairs]
    chunks = [(pairs[i::jobs], method) for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_table_chunk, chunks))
    merged = [r for part in parts for r in part]
    merged.sort(key=lambda r: (r["lambda1"] + r["lambda2"], r["lambda1"]))
    return merged


def render_table(records: Sequence[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(list(records), indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["lambda1", "lambda2", "multiplicity"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buf.getvalue()


# -- forms -------------------------------------------------------------------------


def _blocks_json(blocks) -> list:
    return [
        {
            "terms": [{"exponents": list(e), "coefficient": format_rational(c)} for e, c in sorted(mono.items())],
            "denominator": format_rational(den),
        }
        for mono, den in blocks
    ]


def _blocks_text(blocks, names: str) -> str:
    parts = []
    for mono, den in blocks:
        text = ""
        for e, c in sorted(mono.items(), reverse=True):
            powers = "*".join(f"{n}^{k}" if k > 1 else n for n, k in zip(names, e) if k)
            mag = abs(c)
            body = powers if mag == 1 and powers else (f"{mag}*{powers}" if powers else str(mag))
            if not text:
                text = f"-{body}" if c < 0 else body
            else:
                text += f" - {body}" if c < 0 else f" + {body}"
        parts.append(f"({text})/{den}")
    return " + ".join(parts)


def forms_json(catalog: Catalog = CATALOG) -> dict:
    L = catalog["coefficients"]
    elem = mprime_HT2_elementary(catalog)
    return {
        "hilbert_series": hilbert_T2().to_json(),
        "multiplicity_series": mprime_HT2_closed(catalog).to_json(),
        "elementary_fractions": [
            {"alpha": str(pole.alpha), "power": pole.power, "coefficient": c.to_json()}
            for pole, c in elem.terms
        ],
        "coefficients": {
            name: _blocks_json(L[name])
            for name in ("a_plus", "a_minus", "b_plus", "b_minus", "c_plus", "c_minus")
        },
        "odd_correction": format_rational(L["odd_correction"]),
        "diag_correction": format_rational(L["diag_correction"]),
    }


def forms_text(catalog: Catalog = CATALOG) -> str:
    L = catalog["coefficients"]
    lines = [
        f"H(x, y) = {hilbert_T2()}",
        f"M'(t, v) = {mprime_HT2_closed(catalog)}",
        "M'(t, v) as elementary fractions in t:",
    ]
    for pole, c in mprime_HT2_elementary(catalog).terms:
        lines.append(f"  {pole} * {c}")
    args = {"a_plus": "pq", "a_minus": "pq", "b_plus": "q", "b_minus": "q", "c_plus": "s", "c_minus": "s"}
    for name, vars_ in args.items():
        lines.append(f"{name}({', '.join(vars_)}) = {_blocks_text(L[name], vars_)}")
    lines.append(f"odd_correction = {format_rational(L['odd_correction'])}")
    lines.append(f"diag_correction = {format_rational(L['diag_correction'])}")
    return "\n".join(lines) + "\n"


# -- commands ------------------------------------------------------------------------


def _cmd_mult(ns, catalog, out) -> int:
    lam = _partition_arg(ns.l1, ns.l2)
    value = compute(lam.l1, lam.l2, ns.method, catalog)
    if ns.format == "json":
        rec = dict(_record(lam.l1, lam.l2, value), method=ns.method)
        out.write(json.dumps(rec) + "\n")
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def _cmd_table(ns, catalog, out) -> int:
    text = render_table(table_records(ns.degree, ns.method, ns.jobs, catalog), ns.format)
    if ns.out is None:
        out.write(text)
        return EXIT_OK
    try:
        with open(ns.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"cochar: cannot write {ns.out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_verify(ns, catalog, out) -> int:
    if ns.degree < 2:
        raise UsageError("--degree must be at least 2")
    results = run_checks(ns.degree, catalog)
    for r in results:
        out.write(r.line() + "\n")
    failed = [r for r in results if not r.ok]
    if failed:
        print(f"cochar: first failing check ({failed[0].key}): {failed[0].detail}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _cmd_asym(ns, catalog, out) -> int:
    lam = _partition_arg(ns.l1, ns.l2)
    m = multiplicity_exact(lam, catalog)
    main = asymptotic_main(lam, catalog)
    diff = m - main
    rows = [
        ("multiplicity", format_rational(m)),
        ("main_term", format_rational(main)),
        ("difference", format_rational(diff)),
    ]
    if lam.size:
        ratio = diff / Fraction(lam.size) ** 6
        rows.append(("ratio", format_rational(ratio)))
        rows.append(("ratio_decimal_approx", _decimal(ratio)))
    else:
        rows.append(("ratio", "undefined"))
    if ns.format == "json":
        out.write(json.dumps(dict(rows)) + "\n")
    else:
        out.writelines(f"{k}: {v}\n" for k, v in rows)
    return EXIT_OK


def _cmd_ordinary(ns, catalog, out) -> int:
    value = ordinary_multiplicity(ns.mu, catalog)
    if ns.format == "json":
        out.write(json.dumps({"mu": ns.mu, "multiplicity": value}) + "\n")
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def _cmd_forms(ns, catalog, out) -> int:
    if ns.format == "json":
        out.write(json.dumps(forms_json(catalog), indent=1) + "\n")
    else:
        out.write(forms_text(catalog))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cochar",
        description="Multiplicities m_(l1,l2)(T) in the mixed trace cocharacter of two generic 3x3 matrices.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mult", help="multiplicity of a single partition (l1, l2)")
    p.add_argument("l1", type=int)
    p.add_argument("l2", type=int)
    p.add_argument("--method", choices=METHODS, default="closed")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_mult)

    p = sub.add_parser("table", help="all multiplicities with l1 + l2 <= N")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="closed")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run every identity check up to degree N")
    p.add_argument("--degree", type=int, default=40)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("asym", help="compare a multiplicity with its degree-7 main term")
    p.add_argument("l1", type=int)
    p.add_argument("l2", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_asym)

    p = sub.add_parser("ordinary", help="m_mu(M_3(F)) for mu_3 = ... = mu_9 >= 2")
    p.add_argument("mu", type=int, nargs=9)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_ordinary)

    p = sub.add_parser("forms", help="print the generating functions and coefficient constants")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_forms)
    return parser


def main(argv: Optional[Sequence[str]] = None, catalog: Catalog = CATALOG) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return ns.func(ns, catalog, sys.stdout)
    except (UsageError, ValueError) as exc:
        # DomainError and OutOfScopeError are ValueErrors
        print(f"cochar: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
