"""Command-line front end: sums, tables, proposition checks, expansion demo.

Exit codes: 0 pass/success, 1 usage or input error, 2 internal cross-check
mismatch or failed check. Exact quantities print as integer/rational text;
only the oracle and expansion commands print floats (12 significant digits).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from fractions import Fraction
from math import lcm

from . import even, gensums, verify
from .reports import format_value
from .systems import InvalidSystemError, load_system

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2

FORMATS = ("json", "csv", "plain")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _default_format() -> str:
    fmt = os.environ.get("RAMLAB_FORMAT", "plain")
    return fmt if fmt in FORMATS else "plain"


def _emit_rows(header: list[str], rows: list[list], fmt: str, out) -> None:
    if fmt == "json":
        for row in rows:
            obj = {
                k: (v.numerator if isinstance(v, Fraction) and v.denominator == 1 else v)
                for k, v in zip(header, row)
            }
            obj = {
                k: (format_value(v) if isinstance(v, (Fraction, float)) else v)
                for k, v in obj.items()
            }
            out.write(json.dumps(obj) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) if not isinstance(v, str) else v for v in row])
    else:
        widths = [
            max(len(h), *(len(format_value(r[i])) for r in rows)) if rows else len(h)
            for i, h in enumerate(header)
        ]
        out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for row in rows:
            cells = [format_value(v) if not isinstance(v, str) else v for v in row]
            out.write("  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip() + "\n")


def _cmd_c(args, out) -> int:
    system = load_system(args.system)
    n, r = args.n, args.r
    routes = {
        "divisor": lambda: gensums.c_A_divisor(system, n, r),
        "core": lambda: gensums.c_A_core(system, n, r),
        "oracle": lambda: gensums.c_A_oracle(system, n, r),
    }
    if args.route == "all":
        dv = routes["divisor"]()
        cv = routes["core"]()
        ov = routes["oracle"]()
        match = dv == cv and abs(ov.imag) <= 1e-6 and abs(ov.real - dv) <= 1e-6
        rows = [[n, r, dv, cv, format_value(ov.real), "true" if match else "false"]]
        _emit_rows(["n", "r", "divisor", "core", "oracle", "match"], rows, args.format, out)
        return EXIT_OK if match else EXIT_MISMATCH
    value = routes[args.route]()
    if args.route == "oracle":
        rows = [[n, r, format_value(value.real), format_value(value.imag)]]
        _emit_rows(["n", "r", "re", "im"], rows, args.format, out)
    else:
        _emit_rows(["n", "r", "value"], [[n, r, value]], args.format, out)
    return EXIT_OK


def _cmd_table(args, out) -> int:
    from .systems import gamma_A, mu_A, phi_A, psi_A

    system = load_system(args.system)
    if args.what == "cA":
        n_max = args.nmax or args.rmax
        rows = [
            [n, r, gensums.c_A_divisor(system, n, r)]
            for n in range(1, n_max + 1)
            for r in range(1, args.rmax + 1)
        ]
        _emit_rows(["n", "r", "value"], rows, args.format, out)
        return EXIT_OK
    fn = {"phiA": phi_A, "psiA": psi_A, "gammaA": gamma_A, "muA": mu_A}[args.what]
    rows = [[r, fn(system, r)] for r in range(1, args.rmax + 1)]
    _emit_rows(["r", "value"], rows, args.format, out)
    return EXIT_OK


def _verify_prop1(system, args, out) -> bool:
    # battery: Ramanujan-sum basis elements, the arithmetic-progression
    # totient, and seeded random rational even functions
    xs = [args.xmax]
    if args.xmax > 100:
        xs = [100, args.xmax]
    functions = [even.ramanujan_even(r) for r in range(1, min(args.rmax, 30) + 1)]
    functions.append(even.progression_totient_even(1, 12))
    rng = random.Random(20040233)
    for _ in range(10):
        r = rng.randint(1, args.rmax)
        functions.append(
            even.EvenFunction.from_callable(
                r, lambda d, rng=rng: Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            )
        )
    if args.even:
        functions.append(even.parse_even_literal(args.even))
    all_pass = True
    header = ["r", "x", "exact_sum", "main_term", "residual", "bound", "pass"]
    rows = []
    for f in functions:
        for rep in verify.mean_value_check(f, xs):
            closed = even.partial_sum_even(f, rep.x)
            ok = rep.passed and closed.exact_sum == rep.exact_sum
            all_pass &= ok
            rows.append(
                [f.r, rep.x, rep.exact_sum, rep.main_term, rep.residual,
                 rep.certified_bound, "true" if ok else "false"]
            )
    _emit_rows(header, rows, args.format, out)
    return all_pass


def _verify_prop2(system, args, out) -> bool:
    xs = sorted({1, 2, 3, 10, 100, args.xmax})
    all_pass = True
    rows = []
    for r in range(1, args.rmax + 1):
        for x in xs:
            rep = gensums.partial_sum_cA(system, r, x)
            all_pass &= rep.passed
            rows.append([r, rep.x, rep.exact_sum, rep.main_term, rep.residual,
                         rep.certified_bound, "true" if rep.passed else "false"])
    _emit_rows(["r", "x", "exact_sum", "main_term", "residual", "bound", "pass"],
               rows, args.format, out)
    return all_pass


def _verify_prop3(system, args, out) -> bool:
    ok = True
    rows = []
    for r in range(1, args.rmax + 1):
        rep = verify.orthogonality_report(system, r, r)
        ok &= rep.exact_mean == verify.mean_product_exact(system, r, r)
        ok &= rep.empirical_mean == rep.exact_mean
        rows.append([rep.system, rep.r, rep.s, rep.exact_mean,
                     format_value(rep.empirical_mean), rep.verdict])
    hit = verify.find_orthogonality_violation(system, args.rmax)
    if system.kind == "dirichlet":
        ok &= hit is None
        rows.append([system.label(), 0, 0, 0, "0", "none-found" if hit is None else "unexpected"])
    else:
        ok &= hit is not None
        if hit is not None:
            r, s, v = hit
            emp = verify.mean_product_empirical(system, r, s, lcm(r, s))
            ok &= emp == v
            rows.append([system.label(), r, s, v, format_value(emp), "violating"])
    _emit_rows(["system", "r", "s", "exact_mean", "empirical_mean", "verdict"],
               rows, args.format, out)
    return ok


def _verify_prop4(system, args, out) -> bool:
    witness = verify.additive_closure_witness(system, r_max=args.rmax)
    if witness is None:
        applicable = system.kind == "dirichlet"
        _emit_rows(["system", "status"], [[system.label(), "not-applicable"]], args.format, out)
        return applicable
    ok = (
        witness.f_even
        and witness.g_even
        and witness.h_fails_all
        and witness.core_contradiction
    )
    rows = [[system.label(), witness.p, witness.t, *witness.case_values,
             witness.r_checked, "true" if ok else "false"]]
    _emit_rows(["system", "p", "t", "h_high", "h_mid", "h_low", "r_checked", "pass"],
               rows, args.format, out)
    return ok


def _cmd_verify(args, out) -> int:
    system = load_system(args.system)
    targets = ["prop1", "prop2", "prop3", "prop4"] if args.target == "all" else [args.target]
    runners = {
        "prop1": _verify_prop1,
        "prop2": _verify_prop2,
        "prop3": _verify_prop3,
        "prop4": _verify_prop4,
    }
    all_pass = all(runners[t](system, args, out) for t in targets)
    return EXIT_OK if all_pass else EXIT_MISMATCH


def _cmd_expansion(args, out) -> int:
    res = verify.expansion_demo(args.n, args.terms)
    rows = [[res.n, res.terms, format_value(res.truncated_value),
             format_value(res.target), format_value(res.abs_error)]]
    _emit_rows(["n", "terms", "truncated", "target", "abs_error"], rows, args.format, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ramlab", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=_default_format())
    common.add_argument("-o", "--output", default=None, help="write output to a file")
    sub = parser.add_subparsers(dest="command", required=True)

    p_c = sub.add_parser("c", help="generalized Ramanujan sum c_A(n, r)", parents=[common])
    p_c.add_argument("n", type=int)
    p_c.add_argument("r", type=int)
    p_c.add_argument("--system", default="D", help="D, U, MIX, or a JSON spec file")
    p_c.add_argument("--route", choices=("divisor", "core", "oracle", "all"), default="divisor")
    p_c.set_defaults(func=_cmd_c)

    p_t = sub.add_parser("table", help="tables of c_A, phi_A, psi_A, gamma_A, mu_A", parents=[common])
    p_t.add_argument("--what", choices=("cA", "phiA", "psiA", "gammaA", "muA"), required=True)
    p_t.add_argument("--system", default="D")
    p_t.add_argument("--rmax", type=int, required=True)
    p_t.add_argument("--nmax", type=int, default=None)
    p_t.set_defaults(func=_cmd_table)

    p_v = sub.add_parser("verify", help="run the proposition checkers", parents=[common])
    p_v.add_argument("target", choices=("prop1", "prop2", "prop3", "prop4", "all"))
    p_v.add_argument("--system", default="D")
    p_v.add_argument("--rmax", type=int, default=50)
    p_v.add_argument("--xmax", type=int, default=1000)
    p_v.add_argument("--even", default=None,
                     help="extra even function literal, e.g. 'r=6; 1:1, 2:-1, 3:0, 6:2'")
    p_v.set_defaults(func=_cmd_verify)

    p_e = sub.add_parser("expansion", help="truncated harmonic expansion of sigma(n)/n", parents=[common])
    p_e.add_argument("n", type=int)
    p_e.add_argument("--terms", type=int, default=1000)
    p_e.set_defaults(func=_cmd_expansion)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except InvalidSystemError as exc:
        for v in exc.violations:
            print(v, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    text = buf.getvalue()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
