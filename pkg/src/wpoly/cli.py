"""Command-line entry point: ``wpoly <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (bad graph, failed check,
non-convergence) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction

from .engine import FORMULATIONS, NormalizationError, bracket_oracle, kauffman_bracket
from .family import (
    builtin_family,
    builtin_parts,
    family_bracket,
    family_closed_form,
    matrix_power_check,
)
from .graph import GraphError, components, expand_to_unit, glue_n, load_graph
from .twist import specialize_twist, twist_polynomial
from .zeros import (
    MARGIN,
    TOL_EQM,
    TOL_RESID,
    TOL_ZERO,
    EquimodularError,
    HypothesisError,
    RootError,
    default_t_grid,
    divergence_certificate,
    equimodular_points,
    mahler_trend,
    roots,
)

DOMAIN_ERRORS = (GraphError, NormalizationError, RootError, HypothesisError,
                 EquimodularError, ArithmeticError, KeyError, OSError, ValueError)


class CheckFailed(Exception):
    pass


def _num(x: float) -> str:
    return f"{x:.12g}"


def _affine(c: int, step: int) -> str:
    if step == 0:
        return str(c)
    term = {1: "n", -1: "-n"}.get(step, f"{step}n")
    if c == 0:
        return term
    return f"{c}{term}" if step < 0 else f"{c}+{term}"


def _positive(text: str) -> float:
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return x


def _count(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("n must be >= 1")
    return n


def _n_list(text: str) -> list[int]:
    try:
        out = [_count(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n-list {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("empty n-list")
    return sorted(set(out))


def _t_grid(text: str) -> list[Fraction]:
    """``default``, a comma list of rationals, or ``lo:hi:count``."""
    try:
        if text == "default":
            return default_t_grid()
        if ":" in text:
            lo, hi, k = text.split(":")
            lo, hi, k = Fraction(lo), Fraction(hi), int(k)
            if k < 2:
                return [lo]
            return [lo + (hi - lo) * i / (k - 1) for i in range(k)]
        return sorted({Fraction(p) for p in text.split(",") if p.strip()})
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad t-grid {text!r}") from None


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--tol-resid", type=_positive, default=default)
    p.add_argument("--tol-zero", type=_positive, default=default)
    p.add_argument("--tol-eqm", type=_positive, default=default)
    p.add_argument("--out", default=default, metavar="FILE")
    p.add_argument("--formulation", choices=sorted(FORMULATIONS) + ["oracle"], default=default)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wpoly", parents=[_global_flags(False)],
                                     description="W-polynomials, brackets and Mahler measures.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_global_flags(True)]

    def family_args(p):
        p.add_argument("--family", help="builtin:NAME or a built-in name")
        p.add_argument("--base", help="base graph file (with --tangle)")
        p.add_argument("--tangle", help="tangle graph file (with --base)")

    p = sub.add_parser("bracket", parents=common, help="Kauffman bracket of a graph file")
    p.add_argument("graph")

    p = sub.add_parser("twistpoly", parents=common, help="twist polynomial of a graph file")
    p.add_argument("graph")
    p.add_argument("--lengths", help="comma list: also print the specialization")

    p = sub.add_parser("family", parents=common, help="closed form of a surgery family")
    family_args(p)
    p.add_argument("--n", type=_count, help="also print the bracket of the n-th member")

    p = sub.add_parser("zeros", parents=common, help="roots of a family bracket (CSV)")
    family_args(p)
    p.add_argument("--n", type=_count, required=True)

    p = sub.add_parser("equimod", parents=common, help="equimodular curve points (CSV)")
    family_args(p)
    p.add_argument("--t-grid", type=_t_grid, default=None)

    p = sub.add_parser("mahler", parents=common, help="Mahler measures along a family (CSV)")
    family_args(p)
    p.add_argument("--n-list", type=_n_list, required=True)

    p = sub.add_parser("certify", parents=common, help="divergence certificate")
    family_args(p)
    p.add_argument("--t-grid", type=_t_grid, default=None)
    p.add_argument("--margin", type=_positive, default=MARGIN)

    p = sub.add_parser("verify", parents=common, help="cross-check closed form and engines")
    family_args(p)
    p.add_argument("--n", type=_count, default=4)
    return parser


def _family(args, parser):
    if args.family and (args.base or args.tangle):
        parser.error("use either --family or --base/--tangle")
    if args.family:
        name = args.family.removeprefix("builtin:")
        return builtin_family(name), builtin_parts(name)
    if args.base and args.tangle:
        base, tangle = load_graph(args.base), load_graph(args.tangle)
        return family_closed_form(base, tangle), (base, tangle)
    parser.error("a family is required: --family NAME or --base FILE --tangle FILE")


def _csv(out, header, rows):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)


def _verify(F, base, tangle, n_max, formulation, out):
    for n in range(1, n_max + 1):
        G = glue_n(base, tangle, n)
        direct = kauffman_bracket(G, formulation)
        if family_bracket(F, n) != direct:
            raise CheckFailed(f"closed form differs from direct bracket at n={n}")
        for name in ("delcon", "spantree"):
            if name == "spantree" and components(G) != 1:
                continue
            if kauffman_bracket(G, name) != direct:
                raise CheckFailed(f"formulation {name} differs at n={n}")
        if expand_to_unit(G).ecount <= 18 and bracket_oracle(G) != direct:
            raise CheckFailed(f"state-sum oracle differs at n={n}")
        if F.a11 is not None and not matrix_power_check(F.a11, F.a12, n):
            raise CheckFailed(f"transfer matrix power check failed at n={n}")
    if components(tangle) == 1:
        P = twist_polynomial(tangle)
        lengths = [e.t for e in tangle.edges]
        specialize_twist(P, tangle, lengths, check=True)
    print(f"OK: closed form == direct, n=1..{n_max}", file=out)


def run(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    tol_resid = args.tol_resid or TOL_RESID
    tol_zero = args.tol_zero or TOL_ZERO
    tol_eqm = args.tol_eqm or TOL_EQM
    formulation = args.formulation or "subset"
    buf = io.StringIO()
    try:
        cmd = args.command
        if cmd == "bracket":
            print(kauffman_bracket(load_graph(args.graph), formulation).to_str(), file=buf)
        elif cmd == "twistpoly":
            G = load_graph(args.graph)
            P = twist_polynomial(G)
            print(P.to_str(), file=buf)
            if args.lengths:
                lengths = [int(x) for x in args.lengths.split(",")]
                print(specialize_twist(P, G, lengths, check=True).to_str(), file=buf)
        else:
            F, (base, tangle) = _family(args, parser)
            if cmd == "family":
                for label, val in (("lambda1", F.lambda1), ("lambda2", F.lambda2),
                                   ("coeff1", F.coeff1), ("coeff2", F.coeff2)):
                    print(f"{label}: {val.to_str()}", file=buf)
                _, a0, e0 = F.unit_rule(0)
                sign = "-" if F.sign0 < 0 else ""
                alt = " * (-1)^n" if F.sign_step < 0 else ""
                print(f"unit(n): {sign}A^({_affine(a0, F.a_step)}) * d^({_affine(e0, F.e_step)}){alt}",
                      file=buf)
                if args.n:
                    print(f"bracket(n={args.n}): {family_bracket(F, args.n).to_str()}", file=buf)
            elif cmd == "zeros":
                rs = roots(family_bracket(F, args.n), tol_resid)
                _csv(buf, ["n", "re", "im", "modulus", "residual"],
                     ([args.n, _num(z.real), _num(z.imag), _num(m), _num(r)] for z, r, m in rs))
            elif cmd == "equimod":
                pts = equimodular_points(F.lambda1, F.lambda2, args.t_grid, tol_zero,
                                         tol_eqm, tol_resid)
                _csv(buf, ["t", "re", "im", "modulus", "isolated", "common_lambda_modulus"],
                     ([_num(p.t), _num(p.z.real), _num(p.z.imag), _num(p.modulus),
                       int(p.isolated_flag), _num(p.lambda_mod)] for p in pts))
            elif cmd == "mahler":
                rows = mahler_trend(F, args.n_list, tol_resid)
                _csv(buf, ["n", "mahler", "euclidean_mahler"],
                     ([n, _num(m), _num(me)] for n, m, me in rows))
            elif cmd == "certify":
                cert = divergence_certificate(F, args.t_grid, tol_zero, tol_eqm, tol_resid,
                                              args.margin)
                print(cert.summary(), file=buf)
            elif cmd == "verify":
                _verify(F, base, tangle, args.n, formulation, buf)
    except CheckFailed as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1
    except DOMAIN_ERRORS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 1
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        (out or sys.stdout).write(text)
    return 0


def main(argv=None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:  # argparse usage errors exit with 2
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
