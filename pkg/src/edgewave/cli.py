"""Command line front end.

Subcommands:

    analyze  --alpha A --case C [--eta1 Z] [--eta2 Z] [--k K] [--nmax N]
             [--tol T] [--json]
    verify   --suite {specfun|swe|corner|vanish|oracle|all} [--seed S]
    table    --case C [--alphas A1 A2 ...] [--nmax N] [--json] ...

Exit codes: 0 ok, 1 usage error, 2 numerical rank ambiguity,
3 verification failure.  EDGEWAVE_SEED overrides the default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .angles import AngleError, parse_angle
from .corner import EdgeCornerConfig, ImpedanceSpec
from .vanish import (INFINITE, CaseKind, RankAmbiguityError, theorem_bound,
                     vanishing_order)
from .verify import run_suite

_COMPLEX_RE = re.compile(
    r"^\s*(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?"
    r"\s*(?P<im>[+-]\s*(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)?\s*(?P<i>i)?\s*$")


def parse_complex(text):
    """Parse 'a+bi' / 'a-bi' with optional parts ('2', '1.5-0.5i', 'i', '-i')."""
    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty complex literal")
    m = re.fullmatch(
        r"(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?"
        r"(?:(?P<im>[+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i)?"
        r"|(?P<only_im>[+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i", text)
    if m is None:
        raise ValueError(f"cannot parse complex literal {text!r}")
    if m.group("only_im") is not None:
        part = m.group("only_im")
        if part in ("", "+"):
            return complex(0.0, 1.0)
        if part == "-":
            return complex(0.0, -1.0)
        return complex(0.0, float(part))
    realpart = float(m.group("re")) if m.group("re") else 0.0
    impart = 0.0
    if m.group("im") is not None:
        part = m.group("im")
        impart = 1.0 if part == "+" else -1.0 if part == "-" else float(part)
    return complex(realpart, impart)


def _seed(args):
    env = os.environ.get("EDGEWAVE_SEED")
    if args.seed is not None:
        return args.seed
    if env is not None:
        return int(env)
    return 42


def _build_config(alpha, case, eta1, eta2, k):
    if case == CaseKind.IMP_IMP:
        if eta1 is None or eta2 is None:
            raise ValueError("imp-imp requires --eta1 and --eta2")
        bc1, bc2 = ImpedanceSpec.series(eta1), ImpedanceSpec.series(eta2)
    elif case == CaseKind.PEC_PMC:
        bc1, bc2 = ImpedanceSpec.infinite(), ImpedanceSpec.zero()
    elif case == CaseKind.IMP_PEC:
        if eta2 is None:
            raise ValueError("imp-pec requires --eta2 (the impedance face)")
        bc1, bc2 = ImpedanceSpec.infinite(), ImpedanceSpec.series(eta2)
    elif case == CaseKind.IMP_PMC:
        if eta2 is None:
            raise ValueError("imp-pmc requires --eta2 (the impedance face)")
        bc1, bc2 = ImpedanceSpec.zero(), ImpedanceSpec.series(eta2)
    else:
        raise ValueError(str(case))
    return EdgeCornerConfig(alpha, bc1, bc2, k)


def cmd_analyze(args):
    alpha = parse_angle(args.alpha)
    case = CaseKind.parse(args.case)
    config = _build_config(alpha, case,
                           parse_complex(args.eta1) if args.eta1 else None,
                           parse_complex(args.eta2) if args.eta2 else None,
                           args.k)
    try:
        report = vanishing_order(config, args.nmax, tol=args.tol)
    except RankAmbiguityError as exc:
        print(f"rank ambiguity at order {exc.order}: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        print(report.render())
    return 0


def cmd_table(args):
    case = CaseKind.parse(args.case)
    rows = []
    for text in args.alphas:
        alpha = parse_angle(text)
        config = _build_config(alpha, case,
                               parse_complex(args.eta1) if args.eta1 else None,
                               parse_complex(args.eta2) if args.eta2 else None,
                               args.k)
        try:
            report = vanishing_order(config, args.nmax, tol=args.tol)
        except RankAmbiguityError as exc:
            print(f"rank ambiguity at order {exc.order} for alpha={text}: {exc}",
                  file=sys.stderr)
            return 2
        rows.append((text, alpha, report))
    if args.json:
        print(json.dumps([r.to_json_dict() for _, _, r in rows]))
        return 0
    print(f"{'alpha':>12} {'rationality':>12} {'grid bound':>12} {'assembled':>12}")
    for text, alpha, report in rows:
        rat = f"{alpha.rational[0]}/{alpha.rational[1]}" if alpha.rational \
            else "irrational"
        tb = f">= {args.nmax}" if report.theorem_bound == INFINITE \
            else str(int(report.theorem_bound))
        ob = f">= {args.nmax}" if report.at_nmax else str(report.order_lower_bound)
        print(f"{text:>12} {rat:>12} {tb:>12} {ob:>12}")
    return 0


def cmd_verify(args):
    results = run_suite(args.suite, seed=_seed(args))
    if args.json:
        print(json.dumps([
            {"suite": s, "check": c, "passed": ok, "detail": d}
            for s, c, ok, d in results]))
    else:
        for suite, check, ok, detail in results:
            status = "PASS" if ok else "FAIL"
            print(f"[{status}] {suite}:{check}  {detail}")
    failed = [c for _, c, ok, _ in results if not ok]
    if failed:
        print(f"{len(failed)} failing check(s): {', '.join(failed)}",
              file=sys.stderr)
        return 3
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="edgewave",
        description="Vanishing-order analysis of Maxwell fields at an "
                    "impedance edge-corner")
    sub = ap.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="per-order nullspace analysis of one corner")
    pa.add_argument("--alpha", required=True,
                    help="dihedral angle in units of pi: 'q/p' or a decimal")
    pa.add_argument("--case", required=True,
                    choices=[c.value for c in CaseKind])
    pa.add_argument("--eta1", help="face-1 impedance constant, 'a+bi'")
    pa.add_argument("--eta2", help="face-2 impedance constant, 'a+bi'")
    pa.add_argument("--k", type=float, default=1.0, help="wavenumber")
    pa.add_argument("--nmax", type=int, default=6)
    pa.add_argument("--tol", type=float, default=1e-9)
    pa.add_argument("--seed", type=int)
    pa.add_argument("--json", action="store_true")
    pa.set_defaults(func=cmd_analyze)

    pt = sub.add_parser("table", help="angle-vs-bound table over several angles")
    pt.add_argument("--case", required=True,
                    choices=[c.value for c in CaseKind])
    pt.add_argument("--alphas", nargs="*", default=[])
    pt.add_argument("--eta1", default="1")
    pt.add_argument("--eta2", default="1")
    pt.add_argument("--k", type=float, default=1.0)
    pt.add_argument("--nmax", type=int, default=6)
    pt.add_argument("--tol", type=float, default=1e-9)
    pt.add_argument("--seed", type=int)
    pt.add_argument("--json", action="store_true")
    pt.set_defaults(func=cmd_table)

    pv = sub.add_parser("verify", help="run a module invariant suite")
    pv.add_argument("--suite", required=True,
                    choices=["specfun", "swe", "corner", "vanish", "oracle", "all"])
    pv.add_argument("--seed", type=int)
    pv.add_argument("--json", action="store_true")
    pv.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (AngleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
