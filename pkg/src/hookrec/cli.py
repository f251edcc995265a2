"""Command-line front end.

Exit codes: 0 success, 2 bad arguments, 3 no recurrence found, 4 verification
failed, 5 asymptotics outside the supported ansatz; ``paper`` exits 1 on any
mismatch with the reference values.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

import mpmath

from . import __version__
from .asymptotics import DEFAULT_ORDER, DEFAULT_PRECISION_BITS, UnsupportedAsymptotics, expansion
from .cache import SeriesCache, get_series
from .casestudies import CASES
from .pipeline import (
    DEFAULT_AT_N,
    DEFAULT_TERMS,
    FitResult,
    constant_for,
    fit_and_verify,
    fit_hook_sequence,
    perturbed,
    reproduce,
)
from .recurrence import DEFAULT_D_MAX, DEFAULT_HOLDOUT, DEFAULT_L_MAX, DEFAULT_SURPLUS, InsufficientTermsError
from .sequences import extend_via_recurrence, from_terms

EXIT_OK, EXIT_USAGE, EXIT_NO_OPERATOR, EXIT_UNVERIFIED, EXIT_UNSUPPORTED = 0, 2, 3, 4, 5


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def read_terms(path: str):
    """Read a sequence from a b-file (``n a(n)`` per line) or a comma/space separated list."""
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    pairs = [ln.split() for ln in lines]
    if pairs and all(len(p) == 2 and "," not in ln for p, ln in zip(pairs, lines)):
        idx = [int(p[0]) for p in pairs]
        if idx != list(range(idx[0], idx[0] + len(idx))):
            raise ValueError("b-file indices are not consecutive")
        return from_terms((int(p[1]) for p in pairs), start=idx[0])
    return from_terms(int(t) for t in re.split(r"[,\s]+", " ".join(lines)) if t)


def _cache(args) -> SeriesCache | None:
    if args.no_cache:
        return None
    return SeriesCache(args.cache_dir)


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=1))
    else:
        print(text)


def _fit(args) -> tuple[FitResult | None, int]:
    bounds = dict(L_max=args.L_max, D_max=args.D_max, surplus=args.surplus)
    try:
        if args.input:
            seq = read_terms(args.input)
            terms = len(seq) - args.holdout
            if terms <= 0:
                raise InsufficientTermsError(f"{len(seq)} terms leave nothing to fit after {args.holdout} held out")
            result = fit_and_verify(seq, terms, args.holdout, **bounds)
        else:
            result = fit_hook_sequence(args.k, args.l, args.z, args.terms, args.holdout, _cache(args), **bounds)
    except InsufficientTermsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, EXIT_NO_OPERATOR
    if result.operator is None:
        print("no recurrence found within the search bounds", file=sys.stderr)
        return result, EXIT_NO_OPERATOR
    if not result.report.passed:
        return result, EXIT_UNVERIFIED
    return result, EXIT_OK


def cmd_seq(args) -> int:
    seq = get_series(args.k, args.l, args.z, args.n, _cache(args))
    shown = seq.terms[1:]
    _emit(
        args,
        ", ".join(map(str, shown)),
        {"k": args.k, "l": args.l, "z": args.z, "start": 0, "terms": [str(t) for t in seq.terms]},
    )
    return EXIT_OK


def cmd_fit(args) -> int:
    result, code = _fit(args)
    if result is None or result.operator is None:
        return code
    _emit(
        args,
        f"operator: {result.operator}\norder: {result.operator.order}\nverification: {result.report.summary()}",
        {"operator": result.operator.to_json(), "verification": result.report.to_json()},
    )
    return code


def _asy(args):
    result, code = _fit(args)
    if code != EXIT_OK:
        if result is not None and result.operator is not None:
            print(f"verification failed: {result.report.summary()}", file=sys.stderr)
        return None, None, None, code
    try:
        exp = expansion(result.operator, args.J)
        const_exp = exp if exp.J >= DEFAULT_ORDER else expansion(result.operator, DEFAULT_ORDER)
        est = constant_for(result.series, result.operator, const_exp, args.at_n, args.precision)
    except UnsupportedAsymptotics as exc:
        print(f"unsupported asymptotics: {exc}", file=sys.stderr)
        return result, None, None, EXIT_UNSUPPORTED
    return result, exp, est, EXIT_OK


def _constant_text(est) -> str:
    text = f"constant ~ {mpmath.nstr(est.value, 30)} (n={est.at_n}, drift vs n={est.at_n // 2}: {mpmath.nstr(est.drift, 3)})"
    if est.matched:
        text += f"\nconstant = {est.matched}"
    else:
        text += "\nconstant not recognised"
    return text


def cmd_asy(args) -> int:
    result, exp, est, code = _asy(args)
    if code != EXIT_OK:
        return code
    lines = [
        f"operator: {result.operator}",
        f"mu = {exp.mu}",
        f"theta = {exp.theta}",
        "coeffs = " + ", ".join(str(c) for c in exp.a),
        f"A(n) ~ {exp}",
        _constant_text(est),
    ]
    payload = exp.to_json()
    payload["constant"] = est.to_json()
    if not args.input and not args.no_cache:
        _cache(args).store_results(args.k, args.l, args.z, expansion=exp)
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_const(args) -> int:
    result, exp, est, code = _asy(args)
    if code != EXIT_OK:
        return code
    _emit(args, _constant_text(est), est.to_json())
    return EXIT_OK


def cmd_extend(args) -> int:
    result, code = _fit(args)
    if code != EXIT_OK:
        return code
    ext = extend_via_recurrence(result.series, result.operator, args.to)
    lo = ext.start if args.input else 1
    _emit(
        args,
        ", ".join(str(ext[n]) for n in range(lo, args.to + 1)),
        {"start": ext.start, "terms": [str(t) for t in ext.terms[: args.to + 1 - ext.start]], "operator": result.operator.to_json()},
    )
    return EXIT_OK


def _parse_perturb(text: str):
    m = re.fullmatch(r"(\d+),(\d+),(\d+):(\d+)", text)
    if not m:
        raise argparse.ArgumentTypeError("expected K,L,Z:N")
    k, l, z, n = map(int, m.groups())
    return (k, l, z), n


def cmd_paper(args) -> int:
    cases = list(CASES)
    if args.perturb:
        key, n = args.perturb
        cases = perturbed(cases, key, n)
    cache_dir = None if args.no_cache else str(SeriesCache(args.cache_dir).directory)
    results = reproduce(cases, args.terms, args.holdout, args.at_n, cache_dir, args.jobs)
    names = ["terms", "operator", "expansion", "constant"]
    rows = []
    for r in results:
        status = {c.name: c.ok for c in r.checks}
        cells = ["PASS" if status.get(nm) else ("FAIL" if nm in status else "-") for nm in names]
        rows.append((r.case.label, cells))
    if args.format == "json":
        print(json.dumps([
            {"case": list(r.case.key), "ok": r.ok, "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in r.checks]}
            for r in results
        ], indent=1))
    else:
        print(f"{'case':<20}" + "".join(f"{nm:>11}" for nm in names))
        for label, cells in rows:
            print(f"{label:<20}" + "".join(f"{c:>11}" for c in cells))
    failed = [r for r in results if not r.ok]
    if failed:
        first = failed[0].first_failure()
        print(f"MISMATCH {failed[0].case.label} {first.name}: {first.detail}", file=sys.stderr)
        return 1
    print("all cases reproduced", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookrec",
        description="Young tableaux counts in a (k,l) hook: sequences, recurrences, asymptotics",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache-dir", default=None, help="cache directory (default: $HOOKREC_CACHE_DIR or ~/.cache/hookrec)")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")

    hook = argparse.ArgumentParser(add_help=False)
    hook.add_argument("-k", type=_nonneg, default=2)
    hook.add_argument("-l", type=_nonneg, default=1)
    hook.add_argument("-z", type=_positive, default=1)

    fitting = argparse.ArgumentParser(add_help=False)
    fitting.add_argument("-n", "--terms", type=_positive, default=DEFAULT_TERMS, help="terms used for fitting")
    fitting.add_argument("--holdout", type=_nonneg, default=DEFAULT_HOLDOUT, help="further terms used only for verification")
    fitting.add_argument("--L-max", type=_positive, default=DEFAULT_L_MAX)
    fitting.add_argument("--D-max", type=_nonneg, default=DEFAULT_D_MAX)
    fitting.add_argument("--surplus", type=_nonneg, default=DEFAULT_SURPLUS)
    fitting.add_argument("--input", help="fit this sequence (b-file or comma separated; '-' for stdin) instead of a hook sequence")

    asy = argparse.ArgumentParser(add_help=False)
    asy.add_argument("--at-n", type=_positive, default=DEFAULT_AT_N, help="index at which the constant is estimated")
    asy.add_argument("--precision", type=_positive, default=DEFAULT_PRECISION_BITS, help="working precision in bits")

    p = sub.add_parser("seq", parents=[hook, common], help="print S(1..n)")
    p.add_argument("-n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("fit", parents=[hook, fitting, common], help="guess and verify a recurrence")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("asy", parents=[hook, fitting, asy, common], help="asymptotic expansion with constant")
    p.add_argument("-J", type=_nonneg, default=DEFAULT_ORDER, help="expansion order")
    p.set_defaults(func=cmd_asy)

    p = sub.add_parser("const", parents=[hook, fitting, asy, common], help="estimate and recognise the constant factor")
    p.set_defaults(func=cmd_const, J=DEFAULT_ORDER)

    p = sub.add_parser("extend", parents=[hook, fitting, common], help="extend a sequence with its fitted recurrence")
    p.add_argument("--to", type=_nonneg, required=True, help="last index to produce")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("paper", parents=[common], help="reproduce the four published case studies")
    p.add_argument("-n", "--terms", type=_positive, default=DEFAULT_TERMS)
    p.add_argument("--holdout", type=_nonneg, default=DEFAULT_HOLDOUT)
    p.add_argument("--at-n", type=_positive, default=DEFAULT_AT_N)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--perturb", type=_parse_perturb, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_paper)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
