"""Command line interface (`pade`).

Subcommands: approximate, compare, roots, table. Output is deterministic:
JSON fields have a fixed order, floats are printed with 17 significant
digits, infinities as the string "inf", and identical inputs produce
byte-identical bytes. Exit codes: 0 success, 2 input errors, 3 kernel
dimension mismatch.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .diagnostics import DoubletReport, compare, poly_roots
from .errors import KernelDimensionMismatch, PadeError
from .reduced import ReducedPade, reduced_pade
from .series import Polynomial, PowerSeries, RationalSpec, read_coefficients, taylor_of_rational
from .toeplitz import PadeOrder

ENV_TOL = "PADE_TOL"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


# ---------------------------------------------------------------- formatting


def _fmt_float(x: float) -> str:
    x = float(x)
    if x != x:
        return '"nan"'
    if x == float("inf"):
        return '"inf"'
    if x == float("-inf"):
        return '"-inf"'
    if x == 0.0:
        x = 0.0  # collapse -0.0
    return format(x, ".17g")


def _json(obj) -> str:
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        out = obj.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{out}"'
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, complex):
        return f"[{_fmt_float(obj.real)},{_fmt_float(obj.imag)}]"
    if isinstance(obj, dict):
        inner = ",".join(f'{_json(str(k))}:{_json(v)}' for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _complex_list(values) -> list[complex]:
    return [complex(v) for v in np.asarray(values)]


def _poly_text(p: Polynomial) -> str:
    parts = []
    for c in p.coeffs:
        c = complex(c)
        if c.imag == 0.0:
            parts.append(format(c.real, ".12g"))
        else:
            parts.append(f"({format(c.real, '.12g')}{c.imag:+.12g}j)")
    return "[" + ", ".join(parts) + "]"


# ------------------------------------------------------------------- inputs


def _parse_complex(token: str) -> complex:
    try:
        return complex(float(token))
    except ValueError:
        pass
    try:
        return complex(token)
    except ValueError:
        raise _UsageError(f"cannot parse coefficient {token!r}") from None


def _parse_coeff_string(s: str) -> list[complex]:
    tokens = s.split()
    if not tokens:
        raise _UsageError("empty coefficient list")
    return [_parse_complex(t) for t in tokens]


def _parse_center(s: str) -> complex:
    parts = s.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise _UsageError(f"cannot parse center {s!r}: expected `<re>` or `<re>,<im>`")


def _resolve_tol(args) -> float | None:
    if args.tol is not None:
        if args.tol <= 0:
            raise _UsageError("--tol must be positive")
        return args.tol
    env = os.environ.get(ENV_TOL, "").strip()
    if env:
        try:
            tol = float(env)
        except ValueError:
            raise _UsageError(f"cannot parse {ENV_TOL}={env!r} as a number") from None
        if tol <= 0:
            raise _UsageError(f"{ENV_TOL} must be positive")
        return tol
    return None


def _load_series(args, count: int) -> PowerSeries:
    has_poly = args.num is not None or args.den is not None
    if args.coeffs is not None:
        if has_poly:
            raise _UsageError("give either --coeffs or --num/--den, not both")
        if args.center is not None:
            raise _UsageError("--center conflicts with --coeffs (the file header sets it)")
        return read_coefficients(args.coeffs)
    if args.num is None or args.den is None:
        raise _UsageError("need --coeffs, or both --num and --den")
    center = _parse_center(args.center) if args.center is not None else 0j
    spec = RationalSpec(
        numerator=Polynomial(_parse_coeff_string(args.num)),
        denominator=Polynomial(_parse_coeff_string(args.den)),
    )
    return taylor_of_rational(spec, center, count)


def _add_input_options(sub):
    sub.add_argument("--num", help="numerator coefficients, lowest order first")
    sub.add_argument("--den", help="denominator coefficients, lowest order first")
    sub.add_argument("--coeffs", help="coefficient file (see README for the format)")
    sub.add_argument("--center", help="expansion center `<re>` or `<re>,<im>`")
    sub.add_argument("--tol", type=float, help=f"rank tolerance (default: per-matrix; env {ENV_TOL})")
    sub.add_argument(
        "--format", choices=("json", "csv", "text"), default="json", help="output format"
    )


# ------------------------------------------------------------------ reports


def _roots_of(p: Polynomial, trim_tol: float = 0.0):
    if p.is_zero:
        return None
    return poly_roots(p, trim_tol)


def _root_list(p: Polynomial, trim_tol: float = 0.0) -> list[complex]:
    rs = _roots_of(p, trim_tol)
    return [] if rs is None else _complex_list(rs.roots)


def _approx_body(red: ReducedPade) -> dict:
    idx = red.indices
    return {
        "kappa": idx.kappa,
        "mu1": idx.mu1,
        "mu2": idx.mu2,
        "deficiency": red.deficiency,
        "baker_exists": red.baker_exists,
        "numerator": _complex_list(red.numerator.coeffs),
        "denominator": _complex_list(red.denominator.coeffs),
        "zeroed_p": sorted(red.zeroed_p),
        "zeroed_q": sorted(red.zeroed_q),
        "singular_values": {
            "Tm": [float(s) for s in idx.rank_report.singular],
            "Tkernel": [float(s) for s in red.kernel_rank_report.singular],
        },
        "gaps": {
            "Tm": float(idx.rank_report.gap),
            "Tkernel": float(red.kernel_rank_report.gap),
        },
        "tolerance_used": {
            "Tm": float(idx.rank_report.tolerance),
            "Tkernel": float(red.kernel_rank_report.tolerance),
        },
        "warnings": list(red.warnings),
        "zeros": _root_list(red.numerator),
        "poles": _root_list(red.denominator),
    }


def _order_dict(order: PadeOrder) -> dict:
    return {"m": order.m, "n": order.n}


def _doublet_dict(rep: DoubletReport) -> dict:
    return {
        "count": rep.count,
        "pairs": [
            {"zero": z, "pole": p, "distance": d} for (z, p, d) in rep.pairs
        ],
        "unpaired_zeros": _complex_list(rep.unpaired_zeros),
        "unpaired_poles": _complex_list(rep.unpaired_poles),
        "pairing_tol": rep.pairing_tol,
    }


def _print_warnings_text(warnings, out):
    for w in warnings:
        out.append(f"warning: {w}")


def _approx_text(red: ReducedPade) -> str:
    idx = red.indices
    lines = [
        f"order ({red.order.m}, {red.order.n}) about center {red.center}",
        f"kappa {idx.kappa}, mu1 {idx.mu1}, mu2 {idx.mu2}, deficiency {red.deficiency}, "
        f"baker exists: {'yes' if red.baker_exists else 'no'}",
        f"numerator   {_poly_text(red.numerator)}",
        f"denominator {_poly_text(red.denominator)}",
        f"zeroed numerator indices {sorted(red.zeroed_p)}, "
        f"denominator indices {sorted(red.zeroed_q)}",
        f"zeros {[format(z, '.12g') for z in _root_list(red.numerator)]}",
        f"poles {[format(z, '.12g') for z in _root_list(red.denominator)]}",
    ]
    _print_warnings_text(red.warnings, lines)
    return "\n".join(lines)


# ----------------------------------------------------------------- commands


def _cmd_approximate(args) -> int:
    m, n = args.m, args.n
    tol = _resolve_tol(args)
    f = _load_series(args, m + n + 1)
    red = reduced_pade(f, (m, n), cleanup=not args.no_cleanup, tol=tol)
    if args.format == "json":
        report = {
            "schema": 1,
            "order": _order_dict(red.order),
            "center": complex(red.center),
        }
        report.update(_approx_body(red))
        print(_json(report))
    elif args.format == "text":
        print(_approx_text(red))
    else:
        raise _UsageError("csv output is only defined for the table subcommand")
    return 0


def _cmd_compare(args) -> int:
    m, n = args.m, args.n
    tol = _resolve_tol(args)
    f = _load_series(args, m + n + 1)
    rep = compare(f, (m, n), tol=tol, pairing_tol=args.pairing_tol)
    if args.format == "json":
        body = _approx_body(rep.reduced)
        body["doublets"] = _doublet_dict(rep.reduced_doublets)
        report = {
            "schema": 1,
            "order": _order_dict(rep.order),
            "center": complex(rep.reduced.center),
            "agree": rep.agree,
            "classical": {
                "numerator": _complex_list(rep.classical_numerator.coeffs),
                "denominator": _complex_list(rep.classical_denominator.coeffs),
                "zeros": _complex_list(rep.classical_zeros),
                "poles": _complex_list(rep.classical_poles),
                "doublets": _doublet_dict(rep.classical_doublets),
            },
            "reduced": body,
        }
        print(_json(report))
    elif args.format == "text":
        lines = [
            f"order ({rep.order.m}, {rep.order.n})",
            f"classical doublets: {rep.classical_doublets.count}",
            f"reduced doublets:   {rep.reduced_doublets.count}",
            f"approximants agree up to scale: {'yes' if rep.agree else 'no'}",
        ]
        print("\n".join(lines))
    else:
        raise _UsageError("csv output is only defined for the table subcommand")
    return 0


def _cmd_roots(args) -> int:
    m, n = args.m, args.n
    tol = _resolve_tol(args)
    f = _load_series(args, m + n + 1)
    red = reduced_pade(f, (m, n), cleanup=not args.no_cleanup, tol=tol)

    def block(p: Polynomial) -> dict:
        rs = _roots_of(p, args.trim_tol)
        if rs is None:
            return {
                "roots": [],
                "effective_degree": None,
                "trimmed_leading": 0,
                "trim_tol": args.trim_tol,
            }
        return {
            "roots": _complex_list(rs.roots),
            "effective_degree": rs.effective_degree,
            "trimmed_leading": rs.trimmed_leading,
            "trim_tol": rs.trim_tol,
        }

    if args.format == "json":
        report = {
            "schema": 1,
            "order": _order_dict(red.order),
            "center": complex(red.center),
            "zeros": block(red.numerator),
            "poles": block(red.denominator),
        }
        print(_json(report))
    elif args.format == "text":
        zb = block(red.numerator)
        pb = block(red.denominator)
        lines = [
            f"order ({red.order.m}, {red.order.n}) about center {red.center}",
            f"zeros ({zb['trimmed_leading']} leading coefficients trimmed): "
            f"{[format(complex(z), '.12g') for z in zb['roots']]}",
            f"poles ({pb['trimmed_leading']} leading coefficients trimmed): "
            f"{[format(complex(z), '.12g') for z in pb['roots']]}",
        ]
        print("\n".join(lines))
    else:
        raise _UsageError("csv output is only defined for the table subcommand")
    return 0


def _cmd_table(args) -> int:
    tol = _resolve_tol(args)
    if args.mmax < 0 or args.nmax < 0:
        raise _UsageError("--mmax and --nmax must be non-negative")
    f = _load_series(args, args.mmax + args.nmax + 1)
    cells = []
    class_reps: list[tuple[np.ndarray, np.ndarray]] = []
    for m in range(args.mmax + 1):
        for n in range(args.nmax + 1):
            red = reduced_pade(f, (m, n), cleanup=True, tol=tol)
            pv = np.zeros(args.mmax + 1, dtype=np.complex128)
            pv[: len(red.numerator.coeffs)] = red.numerator.coeffs
            qv = np.zeros(args.nmax + 1, dtype=np.complex128)
            qv[: len(red.denominator.coeffs)] = red.denominator.coeffs
            cls = None
            for ci, (rp, rq) in enumerate(class_reps):
                if np.allclose(pv, rp, atol=1e-8, rtol=0) and np.allclose(
                    qv, rq, atol=1e-8, rtol=0
                ):
                    cls = ci
                    break
            if cls is None:
                cls = len(class_reps)
                class_reps.append((pv, qv))
            cells.append(
                {
                    "m": m,
                    "n": n,
                    "class": cls,
                    "kappa": red.indices.kappa,
                    "deficiency": red.deficiency,
                }
            )
    if args.format == "json":
        report = {
            "schema": 1,
            "mmax": args.mmax,
            "nmax": args.nmax,
            "center": complex(f.center),
            "classes": len(class_reps),
            "cells": cells,
        }
        print(_json(report))
    elif args.format == "csv":
        lines = ["m,n,class,kappa,deficiency"]
        for c in cells:
            lines.append(f"{c['m']},{c['n']},{c['class']},{c['kappa']},{c['deficiency']}")
        print("\n".join(lines))
    else:
        grid = {}
        for c in cells:
            grid[(c["m"], c["n"])] = c["class"]
        width = len(str(len(class_reps) - 1)) if class_reps else 1
        lines = [f"equivalence classes over m=0..{args.mmax}, n=0..{args.nmax} (rows m):"]
        for m in range(args.mmax + 1):
            lines.append(" ".join(f"{grid[(m, n)]:>{width}}" for n in range(args.nmax + 1)))
        print("\n".join(lines))
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="pade", description="Reduced Pade approximants")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("approximate", help="compute the reduced approximant")
    _add_input_options(sub)
    sub.add_argument("-m", type=int, required=True, help="numerator degree")
    sub.add_argument("-n", type=int, required=True, help="denominator degree")
    sub.add_argument("--no-cleanup", action="store_true", help="keep stray coefficients")
    sub.set_defaults(func=_cmd_approximate)

    sub = subs.add_parser("compare", help="baseline vs reduced, doublet counts")
    _add_input_options(sub)
    sub.add_argument("-m", type=int, required=True)
    sub.add_argument("-n", type=int, required=True)
    sub.add_argument("--pairing-tol", type=float, default=1e-3, help="doublet pairing tolerance")
    sub.set_defaults(func=_cmd_compare)

    sub = subs.add_parser("roots", help="zeros/poles of the reduced approximant")
    _add_input_options(sub)
    sub.add_argument("-m", type=int, required=True)
    sub.add_argument("-n", type=int, required=True)
    sub.add_argument("--no-cleanup", action="store_true", help="keep stray coefficients")
    sub.add_argument("--trim-tol", type=float, default=0.0, help="leading coefficient trim")
    sub.set_defaults(func=_cmd_roots)

    sub = subs.add_parser("table", help="equivalence classes over a grid of orders")
    _add_input_options(sub)
    sub.add_argument("--mmax", type=int, required=True, help="largest numerator degree")
    sub.add_argument("--nmax", type=int, required=True, help="largest denominator degree")
    sub.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "m", 0) < 0 or getattr(args, "n", 0) < 0:
            raise _UsageError("-m and -n must be non-negative")
        return args.func(args)
    except KernelDimensionMismatch as exc:
        print(f"pade: {exc}", file=sys.stderr)
        return 3
    except (_UsageError, PadeError, ValueError, OSError) as exc:
        print(f"pade: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
