"""Command-line front end.

All structured output is JSON on stdout (JSON lines for enumerations);
progress goes to stderr.  Identical invocations with identical seeds produce
byte-identical output.  Exit codes: 0 for success including mathematically
negative answers ("the pair is bad", "status unknown"); 1 when a verification
check fails; 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import sys

from . import __version__
from .mingen import min_gen_subsystem, min_gen_type_A_orbits
from .pairs import (
    CRITERIA,
    EnumerationSummary,
    enumerate_block,
    enumerate_pairs,
)
from .patterns import left_bad_exists, right_bad_exists, verify_pattern_theorem
from .serialize import (
    counterexample_dict,
    equation_set_dict,
    equation_set_text,
    mingen_dict,
    pattern_report_dict,
    verdict_dict,
    witness_dict,
)
from .varieties import (
    additional_equation_scan,
    check_point_families,
    p_polynomials,
    point_assignment,
    sample_point_on_Vw,
    verify_witness,
)
from .weyl import Permutation, symmetric_group

INTERFACE_VERSION = "1.0"
DEFAULT_SEED = 42

CRITERIA_CHOICES = ("chain", "parabolic", "orbit", "flatten", "all")


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def _emit(obj, out) -> None:
    out.write(_dumps(obj) + "\n")


def _perm(token: str, n: int) -> Permutation:
    w = Permutation.from_string(token)
    if w.n != n:
        raise ValueError(f"permutation {token!r} does not have n = {n} letters")
    return w


def _default_jobs() -> int:
    env = os.environ.get("WEYLPAIRS_JOBS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _open_out(path):
    if path:
        return open(path, "w")
    return sys.stdout


# ---------------------------------------------------------------------------
# subcommand implementations
# ---------------------------------------------------------------------------

def cmd_pair_classify(args) -> int:
    w1 = _perm(args.w1, args.n)
    w2 = _perm(args.w2, args.n)
    names = (
        ("chain", "parabolic", "orbit", "flatten")
        if args.criteria == "all"
        else (args.criteria,)
    )
    results = {name: CRITERIA[name](args.n, w1, w2) for name in names}
    verdicts = {r.verdict for r in results.values()}
    if len(verdicts) != 1:
        _emit(
            {
                "n": args.n,
                "w1": w1.to_string(),
                "w2": w2.to_string(),
                "error": "criteria disagree",
                "criteria": {k: r.verdict for k, r in results.items()},
            },
            sys.stdout,
        )
        return 1
    group = symmetric_group(args.n)
    merged = {
        "n": args.n,
        "w1": w1.to_string(),
        "w2": w2.to_string(),
        "comparable": next(iter(results.values())).comparable,
        "verdict": next(iter(verdicts)),
        "criteria": {k: r.verdict for k, r in results.items()},
        "chain_witness": None,
        "violating_orbit": None,
        "parabolic": None,
    }
    for r in results.values():
        d = verdict_dict(r, group)
        for key in ("chain_witness", "violating_orbit", "parabolic"):
            if merged[key] is None and d[key] is not None:
                merged[key] = d[key]
    _emit(merged, sys.stdout)
    return 0


def _block_task(task):
    return enumerate_block(*task)


def cmd_pairs_enumerate(args) -> int:
    out = _open_out(args.out)
    try:
        if args.jobs > 1:
            return _enumerate_parallel(args, out)
        summary = EnumerationSummary(args.n)
        for v in enumerate_pairs(
            args.n, args.filter, allow_large=args.allow_large, summary=summary
        ):
            _emit(verdict_dict(v), out)
        _emit(
            {
                "summary": True,
                "n": args.n,
                "total_comparable": summary.total_comparable,
                "bad_count": summary.bad_count,
            },
            out,
        )
        return 0
    finally:
        if out is not sys.stdout:
            out.close()


def _enumerate_parallel(args, out) -> int:
    import math

    if not 2 <= args.n <= 7:
        raise ValueError("enumeration supports 2 <= n <= 7")
    if args.n >= 7 and not args.allow_large:
        raise ValueError("n = 7 is large; pass --allow-large")
    total = math.factorial(args.n)
    nblocks = min(total, args.jobs * 4)
    bounds = [
        (total * k // nblocks, total * (k + 1) // nblocks) for k in range(nblocks)
    ]
    comparable = bad = 0
    with multiprocessing.Pool(args.jobs) as pool:
        tasks = [(args.n, lo, hi, args.filter) for lo, hi in bounds]
        # imap preserves task order, so output stays deterministic while
        # blocks stream out as they finish
        for bidx, (rows, ncomp, nbad) in enumerate(pool.imap(_block_task, tasks)):
            comparable += ncomp
            bad += nbad
            for t1, t2, violation in rows:
                rec = {
                    "w1": Permutation(t1).to_string(),
                    "w2": Permutation(t2).to_string(),
                    "comparable": True,
                    "verdict": "good" if violation is None else "bad",
                    "criterion": "orbitwise",
                    "chain_witness": None,
                    "parabolic": None,
                    "violating_orbit": None
                    if violation is None
                    else {"orbit": list(violation[0]), "i": violation[1], "j": violation[2]},
                }
                _emit(rec, out)
            print(f"block {bidx + 1}/{nblocks} done", file=sys.stderr)
    _emit(
        {
            "summary": True,
            "n": args.n,
            "total_comparable": comparable,
            "bad_count": bad,
        },
        out,
    )
    return 0


def cmd_patterns_verify(args) -> int:
    report = verify_pattern_theorem(args.n, allow_large=args.allow_large)
    _emit(report, sys.stdout)
    return 0 if not report["mismatches"] else 1


def cmd_patterns_query(args) -> int:
    w = Permutation.from_string(args.w)
    _emit(
        {
            "w": w.to_string(),
            "left": pattern_report_dict(left_bad_exists(w)),
            "right": pattern_report_dict(right_bad_exists(w)),
        },
        sys.stdout,
    )
    return 0


def cmd_mings_show(args) -> int:
    w = _perm(args.w, args.n)
    group = symmetric_group(args.n)
    sub = min_gen_subsystem(group, w)
    orbits, _ = min_gen_type_A_orbits(w)
    _emit(mingen_dict(w, sub, orbits), sys.stdout)
    return 0


def cmd_equations_emit(args) -> int:
    w = _perm(args.w, args.n)
    eqs = p_polynomials(w)
    if args.format == "text":
        sys.stdout.write(equation_set_text(eqs))
    else:
        _emit(equation_set_dict(eqs), sys.stdout)
    return 0


def cmd_counterexample_scan(args) -> int:
    out = _open_out(args.out)
    try:
        if args.w and args.wprime:
            w = _perm(args.w, args.n)
            wp = _perm(args.wprime, args.n)
            _emit(counterexample_dict(additional_equation_scan(w, wp)), out)
            return 0
        count = 0
        for v in enumerate_pairs(args.n, "bad", allow_large=args.allow_large):
            rep = additional_equation_scan(v.w2, v.w1)
            _emit(counterexample_dict(rep), out)
            count += 1
            if count % 50 == 0:
                print(f"scanned {count} bad pairs", file=sys.stderr)
        return 0
    finally:
        if out is not sys.stdout:
            out.close()


def cmd_witness_verify(args) -> int:
    w = _perm(args.w, args.n)
    wp = _perm(args.wprime, args.n)
    if args.a is not None and args.b is not None:
        result = verify_witness(w, wp, args.a, args.b)
        _emit(witness_dict(result), sys.stdout)
        return 0 if result.ok else 1
    report = additional_equation_scan(w, wp)
    if report.witness is None:
        _emit(
            {
                "w": w.to_string(),
                "w_prime": wp.to_string(),
                "status": report.status,
                "witness": None,
            },
            sys.stdout,
        )
        return 0
    _emit(witness_dict(report.witness), sys.stdout)
    return 0 if report.witness.ok else 1


def cmd_sample_check(args) -> int:
    w = _perm(args.w, args.n)
    eqs = p_polynomials(w)
    families = {"plucker": True, "incidence": True, "cell": True, "p_equations": True}
    for s in range(args.samples):
        plucker_values, psi = sample_point_on_Vw(w, args.seed + s)
        point = point_assignment(args.n, plucker_values, psi)
        for fam, ok in check_point_families(eqs, point).items():
            families[fam] = families[fam] and ok
    record = {
        "n": args.n,
        "w": w.to_string(),
        "samples": args.samples,
        "seed": args.seed,
        "families": families,
        "ok": all(families.values()),
    }
    _emit(record, sys.stdout)
    return 0 if record["ok"] else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylpairs",
        description="exact-arithmetic toolkit for good/bad Weyl group pairs "
        "and flag-variety cell equations",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"weylpairs {__version__} (interface {INTERFACE_VERSION})",
    )
    top = parser.add_subparsers(dest="group", required=True)

    pair = top.add_parser("pair", help="single-pair classification")
    pair_sub = pair.add_subparsers(dest="verb", required=True)
    classify = pair_sub.add_parser("classify", help="classify one ordered pair")
    classify.add_argument("--n", type=int, required=True)
    classify.add_argument("--w1", required=True)
    classify.add_argument("--w2", required=True)
    classify.add_argument("--criteria", choices=CRITERIA_CHOICES, default="all")
    classify.set_defaults(func=cmd_pair_classify)

    pairs_p = top.add_parser("pairs", help="exhaustive pair enumeration")
    pairs_sub = pairs_p.add_subparsers(dest="verb", required=True)
    enum = pairs_sub.add_parser("enumerate", help="classify all comparable pairs")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--filter", choices=("good", "bad", "all"), default="all")
    enum.add_argument("--out", default=None)
    enum.add_argument("--jobs", type=int, default=_default_jobs())
    enum.add_argument("--allow-large", action="store_true")
    enum.set_defaults(func=cmd_pairs_enumerate)

    patterns_p = top.add_parser("patterns", help="pattern avoidance")
    patterns_sub = patterns_p.add_subparsers(dest="verb", required=True)
    pverify = patterns_sub.add_parser("verify", help="exhaustive theorem check")
    pverify.add_argument("--n", type=int, required=True)
    pverify.add_argument("--allow-large", action="store_true")
    pverify.set_defaults(func=cmd_patterns_verify)
    pquery = patterns_sub.add_parser("query", help="pattern report for one w")
    pquery.add_argument("--w", required=True)
    pquery.set_defaults(func=cmd_patterns_query)

    mings = top.add_parser("mings", help="minimal generating subsystems")
    mings_sub = mings.add_subparsers(dest="verb", required=True)
    show = mings_sub.add_parser("show", help="E_w, Phi_w and d_w for one w")
    show.add_argument("--n", type=int, required=True)
    show.add_argument("--w", required=True)
    show.set_defaults(func=cmd_mings_show)

    equations = top.add_parser("equations", help="cell equation families")
    equations_sub = equations.add_subparsers(dest="verb", required=True)
    emit = equations_sub.add_parser("emit", help="emit every equation family")
    emit.add_argument("--n", type=int, required=True)
    emit.add_argument("--w", required=True)
    emit.add_argument("--format", choices=("json", "text"), default="json")
    emit.set_defaults(func=cmd_equations_emit)

    ce = top.add_parser("counterexample", help="diagonal-equation scanner")
    ce_sub = ce.add_subparsers(dest="verb", required=True)
    scan = ce_sub.add_parser("scan", help="scan bad pairs for separated hits")
    scan.add_argument("--n", type=int, required=True)
    scan.add_argument("--w", default=None, help="scan a single pair: the larger element")
    scan.add_argument("--wprime", default=None, help="the smaller element")
    scan.add_argument("--out", default=None)
    scan.add_argument("--allow-large", action="store_true")
    scan.set_defaults(func=cmd_counterexample_scan)

    witness = top.add_parser("witness", help="witness point verification")
    witness_sub = witness.add_subparsers(dest="verb", required=True)
    wverify = witness_sub.add_parser("verify", help="verify the canonical witness")
    wverify.add_argument("--n", type=int, required=True)
    wverify.add_argument("--w", required=True)
    wverify.add_argument("--wprime", required=True)
    wverify.add_argument("--a", type=int, default=None)
    wverify.add_argument("--b", type=int, default=None)
    wverify.set_defaults(func=cmd_witness_verify)

    sample = top.add_parser("sample", help="random cell points")
    sample_sub = sample.add_subparsers(dest="verb", required=True)
    check = sample_sub.add_parser("check", help="evaluate equation families on samples")
    check.add_argument("--n", type=int, required=True)
    check.add_argument("--w", required=True)
    check.add_argument("--samples", type=int, default=20)
    check.add_argument("--seed", type=int, default=DEFAULT_SEED)
    check.set_defaults(func=cmd_sample_check)

    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
