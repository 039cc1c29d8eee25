"""Command line front end: verify claim grids, or query single objects.

Verification subcommands (netted, fib, genfunc, mod, charpoly, all) expand
their flags into a Cartesian grid of parameter points, run every claim
verifier at every point, and stream one Report per line as text or JSON.
The exit code is 0 when no report failed (hypothesis-not-satisfied and
discrepancy-documented are benign), 1 when any failed, 2 on usage errors.
Grids are generated in sorted order and workers only ever map over that
fixed task list, so output is identical for identical flags and seed,
with or without --jobs.

Query modes skip reports entirely: build prints a matrix, a power, or the
closed-form inverse; mod --entry-point prints a single number; charpoly
with --n prints the computed polynomial and whether the conjectured
factorization matches it.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from math import isqrt

from . import conjecture, fibmat, genfunc, modular, netted
from .matrices import charpoly as matrix_charpoly
from .polynomials import indeterminate
from .reports import FAIL, tally
from .sequences import entry_point

CLAIM_IDS = (
    "thm2.1", "thm2.1.scalar", "sample2",
    "thm3.1", "thm3.2",
    "cor3.4.1", "cor3.4.2", "cor3.4.3", "cor3.4.4", "rem3.5",
    "prop3.6",
    "thm4.1", "thm4.1.inv", "thm4.2",
    "thm5.1.i", "thm5.1.ii", "thm5.1.iii", "thm5.1.iv", "thm5.1.v",
    "thm5.2", "lem5.3", "thm5.4", "ord5",
    "conj6",
)

# stencils used for kernel sampling: the three binomial-family stencils,
# the weight-2 Fibonacci stencil, and one generic asymmetric quad
SAMPLE_SETS = (
    (1, 1, 0, 1),
    (1, 1, -1, 0),
    (0, 1, -1, 1),
    (1, 2, -1, 0),
    (2, 1, 1, 1),
)
SAMPLES_PER_SET = 10

DEFAULT_PRIMES = (3, 5, 7, 11, 13, 29)

# symbolic grids cost more per point; cap them independently of --n-max
SYM_N_POWER_VECTOR = 5
SYM_E_POWER_VECTOR = 3
SYM_N_INVERSE = 8
SYM_N_GENFUNC = 3
SYM_E_GENFUNC = 3
SYM_N_CHARPOLY = 20


def _symbol():
    return indeterminate("m")


def _weight(m):
    return _symbol() if m is None else m


def _t_power_netted(kind, n, m, e_max):
    m = _weight(m)
    if kind == "T":
        mat = fibmat.build_T(n, m)
        params = netted.NettedParams(1, m, -1, 0)
    else:
        mat, params = netted.build_family(kind, n, m)
    return [netted.verify_power_netted(mat, params, e_max,
                                       info={"kind": kind, "n": n, "m": m})]


def _t_scalar(kind, m, e_max):
    m = _weight(m)
    _, params = netted.build_family(kind, 1, m)
    return [netted.scalar_recurrence_check(params, e_max,
                                           info={"kind": kind, "m": m})]


def _t_sample(stencil, n, seed, e_max):
    params = netted.NettedParams(*stencil)
    return [netted.verify_sample(params, n, seed, e_max,
                                 info={"stencil": stencil})]


def _t_power_vector(n, m, e_max, claim_id):
    return [fibmat.verify_power_vector(n, _weight(m), e_max, claim_id)]


def _t_corollaries(n, m, l_max):
    return fibmat.verify_corollary_identities(n, _weight(m), l_max)


def _t_closed_forms(n, m, e_max):
    return [fibmat.verify_closed_forms(n, _weight(m), e_max)]


def _t_inverse(n, m):
    return [fibmat.verify_inverse(n, _weight(m))]


def _t_genfunc(n, m, e_max):
    return [genfunc.verify_genfunc(n, _weight(m), e_max)]


def _t_genfunc_inv(n, m, e_max):
    return [genfunc.verify_genfunc_inversion(n, m, e_max)]


def _t_mod(n, m, p):
    out = modular.verify_entry_point_theorem(n, m, p)
    out.append(modular.verify_up_theorems(n, m, p))
    out.append(modular.verify_root_theorem(n, m, p))
    out.append(modular.verify_order(n, m, p))
    return out


def _t_lemma(m, p):
    return [modular.verify_pair_period_lemma(m, p)]


def _t_conjecture(n, m):
    return [conjecture.verify_conjecture(n, _weight(m))]


_TASKS = {
    "power_netted": _t_power_netted,
    "scalar": _t_scalar,
    "sample": _t_sample,
    "power_vector": _t_power_vector,
    "corollaries": _t_corollaries,
    "closed_forms": _t_closed_forms,
    "inverse": _t_inverse,
    "genfunc": _t_genfunc,
    "genfunc_inv": _t_genfunc_inv,
    "mod": _t_mod,
    "lemma": _t_lemma,
    "conjecture": _t_conjecture,
}


def _run_task(task):
    name, kwargs = task
    return _TASKS[name](**kwargs)


def _netted_tasks(args):
    tasks = []
    for kind in netted.FAMILY_KINDS + ("T",):
        for n in range(2, args.n_max + 1):
            for m in args.m:
                tasks.append(("power_netted",
                              {"kind": kind, "n": n, "m": m,
                               "e_max": args.e_max}))
    for kind in netted.FAMILY_KINDS:
        for m in args.m:
            tasks.append(("scalar", {"kind": kind, "m": m, "e_max": 50}))
    for stencil in SAMPLE_SETS:
        for d in range(SAMPLES_PER_SET):
            tasks.append(("sample",
                          {"stencil": stencil, "n": 4,
                           "seed": args.seed + d, "e_max": 3}))
    return tasks


def _fib_tasks(args):
    tasks = []
    for n in range(2, args.n_max + 1):
        tasks.append(("power_vector",
                      {"n": n, "m": 2, "e_max": args.e_max,
                       "claim_id": "thm3.1"}))
        for m in args.m:
            tasks.append(("power_vector",
                          {"n": n, "m": m, "e_max": args.e_max,
                           "claim_id": "thm3.2"}))
            tasks.append(("corollaries", {"n": n, "m": m,
                                          "l_max": args.l_max}))
            tasks.append(("closed_forms", {"n": n, "m": m,
                                           "e_max": args.e_max}))
            tasks.append(("inverse", {"n": n, "m": m}))
    if args.symbolic:
        for n in range(2, min(args.n_max, SYM_N_POWER_VECTOR) + 1):
            tasks.append(("power_vector",
                          {"n": n, "m": None,
                           "e_max": min(args.e_max, SYM_E_POWER_VECTOR),
                           "claim_id": "thm3.2"}))
        for n in range(2, min(args.n_max, SYM_N_INVERSE) + 1):
            tasks.append(("inverse", {"n": n, "m": None}))
    return tasks


def _genfunc_tasks(args):
    tasks = []
    for n in range(2, args.n_max + 1):
        for m in args.m:
            tasks.append(("genfunc", {"n": n, "m": m, "e_max": args.e_max}))
            tasks.append(("genfunc_inv", {"n": n, "m": m,
                                          "e_max": args.e_max}))
    if args.symbolic:
        for n in range(2, min(args.n_max, SYM_N_GENFUNC) + 1):
            tasks.append(("genfunc",
                          {"n": n, "m": None,
                           "e_max": min(args.e_max, SYM_E_GENFUNC)}))
    return tasks


def _mod_tasks(args):
    tasks = []
    for p in args.p:
        for m in args.m:
            tasks.append(("lemma", {"m": m, "p": p}))
            for n in range(2, args.n_max + 1):
                tasks.append(("mod", {"n": n, "m": m, "p": p}))
    return tasks


def _charpoly_tasks(args):
    tasks = []
    for n in range(2, args.n_max + 1):
        for m in args.m:
            tasks.append(("conjecture", {"n": n, "m": m}))
    if args.symbolic:
        for n in range(2, min(args.n_max, SYM_N_CHARPOLY) + 1):
            tasks.append(("conjecture", {"n": n, "m": None}))
    return tasks


_GRIDS = {
    "netted": _netted_tasks,
    "fib": _fib_tasks,
    "genfunc": _genfunc_tasks,
    "mod": _mod_tasks,
    "charpoly": _charpoly_tasks,
}


def _all_tasks(args):
    tasks = []
    for name in ("netted", "fib", "genfunc", "mod", "charpoly"):
        tasks.extend(_GRIDS[name](args))
    return tasks


def _text_lines(report):
    parts = [report.claim_id, report.status]
    parts.extend(f"{k}={v}" for k, v in report.params.items())
    yield " ".join(parts)
    shown = report.witnesses[:8]
    for loc, want, got in shown:
        yield f"  ! {loc}: expected {want}, got {got}"
    if len(report.witnesses) > len(shown):
        yield f"  ! ... {len(report.witnesses) - len(shown)} more"
    if report.note:
        yield f"  # {report.note}"


def _emit(reports, args):
    sink = open(args.out, "w") if args.out else sys.stdout
    try:
        for r in reports:
            if args.format == "json":
                sink.write(json.dumps(r.as_dict(), sort_keys=True) + "\n")
            else:
                for line in _text_lines(r):
                    sink.write(line + "\n")
    finally:
        if args.out:
            sink.close()
    counts = tally(reports)
    summary = ", ".join(f"{v} {k}" for k, v in counts.items() if v)
    print(f"{len(reports)} reports: {summary or 'none'}", file=sys.stderr)
    return 1 if counts[FAIL] else 0


def _run_grid(args):
    tasks = _GRIDS[args.command](args) if args.command != "all" \
        else _all_tasks(args)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            chunks = list(pool.map(_run_task, tasks))
    else:
        chunks = [_run_task(t) for t in tasks]
    reports = [r for chunk in chunks for r in chunk]
    return _emit(reports, args)


def _cmd_build(args):
    m = _symbol() if args.symbolic else args.m_single
    mat = (fibmat.build_T_inverse(args.n, m) if args.inverse
           else fibmat.build_T(args.n, m))
    if args.power != 1:
        mat = mat ** args.power
    print(mat)
    return 0


def _cmd_mod(args):
    if args.entry_point:
        if len(args.m) != 1 or len(args.p) != 1:
            print("mod --entry-point takes exactly one --m and one --p",
                  file=sys.stderr)
            return 2
        print(entry_point(args.m[0], args.p[0]))
        return 0
    return _run_grid(args)


def _cmd_charpoly(args):
    if args.n is None:
        return _run_grid(args)
    m = _symbol() if args.symbolic else (args.m[0] if args.m else 1)
    report = conjecture.verify_conjecture(args.n, m)
    poly = matrix_charpoly(fibmat.build_T(args.n, m))
    verdict = "equal" if report.status == "pass" else "DIFFER"
    print(f"{verdict}: {poly}")
    return 0 if report.status == "pass" else 1


def _prime(text):
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if p < 2 or any(p % q == 0 for q in range(2, isqrt(p) + 1)):
        raise argparse.ArgumentTypeError(f"not a prime: {p}")
    return p


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _add_grid_flags(sub, n_max=8, e_max=6, l_max=4, with_p=False,
                    with_symbolic=True):
    sub.add_argument("--n-max", type=_positive, default=n_max,
                     help="largest matrix size in the grid")
    sub.add_argument("--m", type=int, action="append",
                     help="weight value; repeatable (default 1 2 3)")
    sub.add_argument("--e-max", type=_positive, default=e_max,
                     help="largest power exponent")
    sub.add_argument("--l-max", type=_nonneg, default=l_max,
                     help="largest shift index in summation identities")
    if with_p:
        sub.add_argument("--p", type=_prime, action="append",
                         help="prime modulus; repeatable "
                              "(default 3 5 7 11 13 29)")
    if with_symbolic:
        sub.add_argument("--symbolic", action="store_true",
                         help="also run symbolic-weight variants")
    sub.add_argument("--seed", type=_nonneg, default=0,
                     help="base seed for kernel sampling")
    sub.add_argument("--jobs", type=_positive, default=1,
                     help="worker processes for the grid")
    sub.add_argument("--format", choices=("text", "json"), default="text",
                     help="report encoding")
    sub.add_argument("--out", help="write reports to this file instead "
                                   "of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nettedmat",
        description="verify netted-matrix claims over parameter grids")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("build", help="print a matrix, power, or inverse")
    sub.add_argument("--n", type=_positive, required=True)
    sub.add_argument("--m", dest="m_single", type=int, default=1)
    sub.add_argument("--power", type=_nonneg, default=1)
    sub.add_argument("--inverse", action="store_true")
    sub.add_argument("--symbolic", action="store_true")
    sub.set_defaults(func=_cmd_build)

    sub = subs.add_parser("netted", help="power-stencil claims")
    _add_grid_flags(sub, with_symbolic=False)
    sub.set_defaults(func=_run_grid)

    sub = subs.add_parser("fib", help="power-vector, summation, closed-form,"
                                      " and inverse claims")
    _add_grid_flags(sub)
    sub.set_defaults(func=_run_grid)

    sub = subs.add_parser("genfunc", help="generating-window claims")
    _add_grid_flags(sub)
    sub.set_defaults(func=_run_grid)

    sub = subs.add_parser("mod", help="mod-p claims, or --entry-point query")
    _add_grid_flags(sub, with_p=True, with_symbolic=False)
    sub.add_argument("--entry-point", action="store_true",
                     help="print the least e with p | U_e and exit")
    sub.set_defaults(func=_cmd_mod)

    sub = subs.add_parser("charpoly", help="characteristic polynomial "
                                           "factorization claims")
    sub.add_argument("--n", type=_positive,
                     help="single size: print the polynomial and verdict")
    _add_grid_flags(sub)
    sub.set_defaults(func=_cmd_charpoly)

    sub = subs.add_parser("all", help="every claim over one grid")
    _add_grid_flags(sub, with_p=True)
    sub.set_defaults(func=_run_grid)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "m", None) is None and args.command != "build":
        args.m = [1, 2, 3]
    if getattr(args, "p", None) is None and args.command in ("mod", "all"):
        args.p = list(DEFAULT_PRIMES)
    if hasattr(args, "p"):
        args.p = sorted(set(args.p))
    if hasattr(args, "m") and args.command != "build":
        args.m = sorted(set(args.m))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
