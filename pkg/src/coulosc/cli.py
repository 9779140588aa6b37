"""Command-line front end.

Subcommands: solve, spectrum, wavefunction, series, verify.  Tabular output
is CSV or JSON with fixed headers; rationals print as "p/q", floats as their
shortest round-trip decimal, so identical inputs always produce identical
bytes.  Exit codes: 0 ok, 1 usage error, 2 no positive root, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

import numpy as np

from . import recursion, truncation, verify
from .model import DimensionlessParams
from .verify import RadialGrid

GRID_STEP_ENV = "QES_DEFAULT_GRID_STEP"


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _default_step():
    raw = os.environ.get(GRID_STEP_ENV)
    if raw is None:
        return 1e-3
    try:
        step = float(raw)
    except ValueError:
        raise SystemExit(f"invalid {GRID_STEP_ENV}={raw!r}: not a decimal")
    if step <= 0:
        raise SystemExit(f"invalid {GRID_STEP_ENV}={raw!r}: must be positive")
    return step


def _fmt_frac(q: Fraction) -> str:
    return str(q)


def _fmt_beta(root) -> str:
    if root.is_rational:
        return _fmt_frac(root.value)
    return repr(float(root))


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _csv(header, rows):
    lines = [header]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _add_unit_flags(p):
    p.add_argument("--mass", type=float, default=1.0, help="particle mass (default 1)")
    p.add_argument("--omega", type=float, default=1.0, help="oscillator frequency (default 1)")
    p.add_argument("--hbar", type=float, default=1.0, help="reduced Planck constant (default 1)")


def _units_overridden(args):
    return (args.mass, args.omega, args.hbar) != (1.0, 1.0, 1.0)


def _add_output_flags(p, plot=True):
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default="-", help="output file, '-' for stdout")
    if plot:
        p.add_argument("--plot", metavar="PNG",
                       help="also render a matplotlib figure to this file")


def build_parser():
    p = _Parser(prog="coulosc",
                description="Closed-form bound states of the combined Coulomb + "
                            "oscillator potential, with numerical verification.")
    sub = p.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="beta roots, energy and exact coefficients "
                                      "for one (n, l)")
    ps.add_argument("--n", type=int, required=True, help="polynomial degree of v")
    ps.add_argument("--l", type=int, required=True, help="azimuthal quantum number")
    _add_output_flags(ps, plot=False)
    _add_unit_flags(ps)
    ps.set_defaults(func=cmd_solve)

    pp = sub.add_parser("spectrum", help="sweep all (n, l) up to given maxima")
    pp.add_argument("--n-max", type=int, required=True)
    pp.add_argument("--l-max", type=int, required=True)
    _add_output_flags(pp)
    _add_unit_flags(pp)
    pp.set_defaults(func=cmd_spectrum)

    pw = sub.add_parser("wavefunction", help="sample one normalized bound state")
    pw.add_argument("--n", type=int, required=True)
    pw.add_argument("--l", type=int, required=True)
    pw.add_argument("--root-index", type=int, default=0)
    pw.add_argument("--points", type=int, default=10000,
                    help="number of grid steps (default 10000)")
    pw.add_argument("--x-max", type=float, default=10.0)
    _add_output_flags(pw)
    pw.set_defaults(func=cmd_wavefunction)

    pt = sub.add_parser("series", help="untruncated-series divergence table")
    pt.add_argument("--l", type=int, required=True)
    pt.add_argument("--beta", type=float, required=True)
    pt.add_argument("--epsilon", type=float, required=True,
                    help="trial dimensionless energy E/(hbar*omega)")
    pt.add_argument("--terms", type=int, default=200)
    _add_output_flags(pt)
    pt.set_defaults(func=cmd_series)

    pv = sub.add_parser("verify", help="check analytic energies against both "
                                       "numerical oracles")
    pv.add_argument("--n", type=int, required=True)
    pv.add_argument("--l", type=int, required=True)
    pv.add_argument("--root-index", type=int, default=None,
                    help="verify only this root (default: all)")
    pv.add_argument("--tol", type=float, default=1e-6)
    pv.add_argument("--x-max", type=float, default=10.0)
    pv.add_argument("--step", type=float, default=None,
                    help=f"grid step (default {GRID_STEP_ENV} or 1e-3)")
    pv.add_argument("--output", default="-")
    pv.set_defaults(func=cmd_verify)

    return p


def _solutions_or_exit(args, parser):
    if args.n < 1 or args.l < 0:
        parser.error("need --n >= 1 and --l >= 0")
    return truncation.solve_qes(args.n, args.l)


def cmd_solve(args, parser):
    sols = _solutions_or_exit(args, parser)
    if not sols:
        sys.stderr.write(f"no positive beta root for n={args.n}, l={args.l}\n")
        return 2
    show_lab = _units_overridden(args)
    hbar_omega = args.hbar * args.omega
    if args.format == "csv":
        header = "root_index,beta,epsilon,coefficients"
        if show_lab:
            header += ",energy_lab"
        rows = []
        for idx, s in enumerate(sols):
            row = [str(idx), _fmt_beta(s.beta), repr(float(s.epsilon)),
                   ";".join(_fmt_frac(c) for c in s.coefficients)]
            if show_lab:
                row.append(repr(float(s.epsilon) * hbar_omega))
            rows.append(row)
        _write(args.output, _csv(header, rows))
    else:
        cp = truncation.constraint_polynomial(args.n, args.l)
        doc = {
            "n": args.n,
            "l": args.l,
            "constraint_poly": [_fmt_frac(c) for c in cp.poly.coeffs],
            "constraint_parity": cp.poly.parity,
            "roots": [],
        }
        for idx, s in enumerate(sols):
            entry = {
                "root_index": idx,
                "beta": ({"exact": _fmt_frac(s.beta.value)} if s.beta.is_rational
                         else {"low": _fmt_frac(s.beta.low),
                               "high": _fmt_frac(s.beta.high),
                               "decimal": float(s.beta)}),
                "epsilon": _fmt_frac(s.epsilon),
                "epsilon_decimal": float(s.epsilon),
                "coefficients": [_fmt_frac(c) for c in s.coefficients],
            }
            if show_lab:
                entry["energy_lab"] = float(s.epsilon) * hbar_omega
            doc["roots"].append(entry)
        _write(args.output, json.dumps(doc, indent=2) + "\n")
    return 0


def _spectrum_rows(n_max, l_max):
    rows = []
    for n in range(1, n_max + 1):
        for l in range(l_max + 1):
            for idx, s in enumerate(truncation.solve_qes(n, l)):
                rows.append((n, l, idx, s))
    return rows


def cmd_spectrum(args, parser):
    if args.n_max < 1 or args.l_max < 0:
        parser.error("need --n-max >= 1 and --l-max >= 0")
    rows = _spectrum_rows(args.n_max, args.l_max)
    show_lab = _units_overridden(args)
    hbar_omega = args.hbar * args.omega
    if args.format == "csv":
        header = "n,l,root_index,beta,epsilon"
        if show_lab:
            header += ",energy_lab"
        out_rows = []
        for n, l, idx, s in rows:
            row = [str(n), str(l), str(idx), _fmt_beta(s.beta), repr(float(s.epsilon))]
            if show_lab:
                row.append(repr(float(s.epsilon) * hbar_omega))
            out_rows.append(row)
        _write(args.output, _csv(header, out_rows))
    else:
        doc = []
        for n, l, idx, s in rows:
            entry = {"n": n, "l": l, "root_index": idx, "beta": _fmt_beta(s.beta),
                     "epsilon": float(s.epsilon)}
            if show_lab:
                entry["energy_lab"] = float(s.epsilon) * hbar_omega
            doc.append(entry)
        _write(args.output, json.dumps(doc, indent=2) + "\n")
    if args.plot:
        from . import plotting
        plotting.save_spectrum_figure(
            [(n, l, idx, float(s.beta), float(s.epsilon)) for n, l, idx, s in rows],
            args.plot)
    return 0


def cmd_wavefunction(args, parser):
    sols = _solutions_or_exit(args, parser)
    if not sols:
        sys.stderr.write(f"no positive beta root for n={args.n}, l={args.l}\n")
        return 2
    if not 0 <= args.root_index < len(sols):
        sys.stderr.write(f"root index {args.root_index} out of range "
                         f"(have {len(sols)} roots)\n")
        return 1
    if args.points < 3 or args.x_max <= 0:
        parser.error("need --points >= 3 and --x-max > 0")
    sol = sols[args.root_index]
    xs = np.linspace(args.x_max / args.points, args.x_max, args.points)
    table = verify.eval_wavefunction(sol, xs)
    if args.format == "csv":
        rows = [[repr(float(x)), repr(float(u)), repr(float(v))]
                for x, u, v in zip(table.x, table.u, table.v)]
        _write(args.output, _csv("x,u,v", rows))
    else:
        doc = {"n": args.n, "l": args.l, "root_index": args.root_index,
               "beta": _fmt_beta(sol.beta), "norm": table.norm,
               "rows": [{"x": float(x), "u": float(u), "v": float(v)}
                        for x, u, v in zip(table.x, table.u, table.v)]}
        _write(args.output, json.dumps(doc, indent=2) + "\n")
    if args.plot:
        from . import plotting
        plotting.save_wavefunction_figure(table, args.plot)
    return 0


def cmd_series(args, parser):
    if args.l < 0 or args.beta < 0 or args.epsilon <= 0 or args.terms < 3:
        parser.error("need --l >= 0, --beta >= 0, --epsilon > 0, --terms >= 3")
    # from (beta, eps): rho1 = 1/(2 eps), rho0^2 = 2 beta/eps = 4 beta rho1
    rho1 = 1.0 / (2.0 * args.epsilon)
    rho0 = math.sqrt(2.0 * args.beta / args.epsilon)
    dp = DimensionlessParams(rho0=rho0, rho1=rho1, l=args.l)
    st = recursion.coefficients_float(dp, args.terms)
    rows = []
    for i, c in enumerate(st.coefficients):
        ratio = None
        if 1 <= i <= args.terms - 2 and st.coefficients[i - 1] != 0:
            ratio = recursion.tail_ratio(st, i)
        asym = 2.0 * rho1 / i if i >= 1 else None
        rows.append((i, c, ratio, asym))
    if args.format == "csv":
        out = [[str(i), repr(c),
                "" if r is None else repr(r),
                "" if a is None else repr(a)] for i, c, r, a in rows]
        _write(args.output, _csv("i,c_i,ratio,asymptote", out))
    else:
        doc = [{"i": i, "c_i": c, "ratio": r, "asymptote": a} for i, c, r, a in rows]
        _write(args.output, json.dumps(doc, indent=2) + "\n")
    if args.plot:
        from . import plotting
        plotting.save_series_figure(rows, args.plot)
    return 0


def cmd_verify(args, parser):
    sols = _solutions_or_exit(args, parser)
    if not sols:
        sys.stderr.write(f"no positive beta root for n={args.n}, l={args.l}\n")
        return 2
    if args.root_index is not None:
        if not 0 <= args.root_index < len(sols):
            sys.stderr.write(f"root index {args.root_index} out of range\n")
            return 1
        picked = [(args.root_index, sols[args.root_index])]
    else:
        picked = list(enumerate(sols))
    step = args.step if args.step is not None else _default_step()
    grid = RadialGrid(x_max=args.x_max, step=step)
    lines = []
    ok = True
    for idx, s in picked:
        eps = float(s.epsilon)
        b = float(s.beta)
        shot = verify.numerov_shoot(b, args.l, (eps - 0.5, eps + 0.5), grid)
        mat = verify.matrix_spectrum(b, args.l, grid,
                                     k_levels=2 * (args.n + args.l) + 4,
                                     tol=args.tol)
        d_shoot = abs(shot.epsilon - eps)
        d_mat = min(abs(e - eps) for e in mat)
        passed = d_shoot < args.tol and d_mat < args.tol
        ok = ok and passed
        lines.append(
            f"n={args.n} l={args.l} root={idx} beta={_fmt_beta(s.beta)} "
            f"epsilon={eps!r} numerov={shot.epsilon!r} |d_numerov|={d_shoot:.3e} "
            f"|d_matrix|={d_mat:.3e} nodes={shot.node_count} "
            f"{'PASS' if passed else 'FAIL'}")
    _write(args.output, "\n".join(lines) + "\n")
    return 0 if ok else 3


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
