"""Command-line front end.

Subcommands: count (four term-generation methods, three output formats),
scheme (print the equation system), eliminate (derive the algebraic equation
and match it against the shipped reference), guess (recurrence or algebraic
equation from data), asympt (growth-law report).

Exit codes: 0 success and all requested verifications passed; 1 generic
error; 2 brute-force cap exceeded; 3 timeout; 4 insufficient terms or no
verified recurrence available; 5 a verification or reference match failed.
"""

import argparse
import json
import sys
from datetime import datetime, timezone

from . import __version__
from .asymptotics import conjecture_check, report_table, sequence_for
from .cache import Cache
from .elimination import (
    EmptyEliminationError,
    compress_exponents,
    eliminate,
    match_equation,
    verify_annihilation,
)
from .fixtures import load_cached_recurrence, reference_equation
from .groebner import EliminationTimeout
from .guessing import (
    InsufficientTermsError,
    guess_algebraic,
    guess_recurrence,
)
from .scheme import CountSequence, build_scheme, word_counts
from .words import (
    P123,
    BruteForceCapError,
    count_avoiders_bruteforce,
    count_avoiders_recurrence,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CAP = 2
EXIT_TIMEOUT = 3
EXIT_INSUFFICIENT = 4
EXIT_VERIFICATION = 5


def _emit_json(command, parameters, result):
    doc = {
        "command": command,
        "parameters": parameters,
        "result": result,
        "tool_version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    print(json.dumps(doc, indent=1, sort_keys=True))


def _counts_via(method, r, nmax, cap, cache):
    if method == "scheme":
        cached = cache.load("sequence", r, {"nmax": nmax, "method": "scheme"})
        if cached is not None:
            return CountSequence.from_json(cached)
        seq = word_counts(r, nmax)
        cache.store("sequence", r, {"nmax": nmax, "method": "scheme"}, seq.to_json())
        return seq
    if method == "brute":
        if r * nmax > cap:
            raise BruteForceCapError(f"r*nmax = {r * nmax} exceeds cap {cap}")
        terms = [count_avoiders_bruteforce((r,) * n, P123, cap=cap) for n in range(nmax + 1)]
        return CountSequence(r=r, terms=terms)
    if method == "recurrence":
        terms = [count_avoiders_recurrence((r,) * n) for n in range(nmax + 1)]
        return CountSequence(r=r, terms=terms)
    if method == "linear-rec":
        try:
            load_cached_recurrence(r)
        except (FileNotFoundError, KeyError) as exc:
            raise InsufficientTermsError(
                f"no verified recurrence available for r={r}"
            ) from exc
        return sequence_for(r, nmax)
    raise ValueError(f"unknown method {method}")


def cmd_count(args):
    cache = Cache(args.cache_dir, enabled=not args.no_cache)
    seq = _counts_via(args.method, args.r, args.nmax, args.cap, cache)
    if args.format == "text":
        print(" ".join(str(t) for t in seq.terms))
    elif args.format == "json":
        _emit_json(
            "count",
            {"r": args.r, "nmax": args.nmax, "method": args.method},
            seq.to_json(),
        )
    elif args.format == "bfile":
        print(f"# w_r(n) for r={args.r}; offset 0: w_r(0)=1")
        for n, t in enumerate(seq.terms):
            print(f"{n} {t}")
    return EXIT_OK


def cmd_scheme(args):
    scheme = build_scheme(args.r)
    if args.format == "json":
        _emit_json("scheme", {"r": args.r}, scheme.to_json())
    else:
        print(scheme.pretty())
    return EXIT_OK


def cmd_eliminate(args):
    cache = Cache(args.cache_dir, enabled=not args.no_cache)
    timeout = None if args.unbounded else args.timeout
    params = {"backend": args.backend, "timeout": "none" if timeout is None else timeout}
    scheme = build_scheme(args.r)
    cached = cache.load("equation", args.r, {"backend": args.backend})
    if cached is not None:
        from .bivariate import BivariatePolynomial

        equation = BivariatePolynomial.from_json(cached)
    else:
        raw = eliminate(scheme, backend=args.backend, timeout=timeout)
        equation = compress_exponents(raw, args.r)
        cache.store("equation", args.r, {"backend": args.backend}, equation.to_json())

    verdict = None
    annihilates = None
    exit_code = EXIT_OK
    if args.r <= 4:
        reference = reference_equation(args.r)
        verdict = match_equation(equation, reference).status
        if verdict == "mismatch":
            exit_code = EXIT_VERIFICATION
    cutoff = max(50, 2 * (equation.deg_x() + equation.deg_f()) + 1)
    series = word_counts(args.r, cutoff).generating_series()
    annihilates = verify_annihilation(equation, series)
    if not annihilates:
        exit_code = EXIT_VERIFICATION

    if args.format == "json":
        _emit_json(
            "eliminate",
            {"r": args.r, **params},
            {
                "equation": equation.to_json(),
                "reference_match": verdict,
                "annihilates_series": annihilates,
                "series_cutoff": cutoff,
            },
        )
    else:
        print(f"P_{args.r}(x, F) = {equation}")
        if verdict is not None:
            print(f"reference match: {verdict}")
        print(f"annihilates series mod x^{cutoff}: {annihilates}")
    return exit_code


def cmd_guess(args):
    cache = Cache(args.cache_dir, enabled=not args.no_cache)
    if args.algebraic:
        nterms = args.terms or (args.max_deg_x + 1) * (args.max_deg_f + 1) + 12
        series = word_counts(args.r, nterms - 1).generating_series()
        poly = guess_algebraic(series, args.max_deg_x, args.max_deg_f)
        if poly is None:
            print("no algebraic equation found within the bounds", file=sys.stderr)
            return EXIT_INSUFFICIENT
        verdict = None
        if args.r <= 4:
            verdict = match_equation(poly, reference_equation(args.r)).status
        if args.format == "json":
            _emit_json(
                "guess-algebraic",
                {"r": args.r, "max_deg_x": args.max_deg_x, "max_deg_f": args.max_deg_f},
                {"equation": poly.to_json(), "reference_match": verdict},
            )
        else:
            print(poly)
            if verdict is not None:
                print(f"reference match: {verdict}")
        return EXIT_VERIFICATION if verdict == "mismatch" else EXIT_OK

    nterms = args.terms or (args.max_order + 1) * (args.max_degree + 1) + args.max_order + 14
    params = {"max_order": args.max_order, "max_degree": args.max_degree, "terms": nterms}
    cached = cache.load("recurrence", args.r, params)
    if cached is not None:
        from .guessing import LinearRecurrence

        rec = LinearRecurrence.from_json(cached)
    else:
        seq = word_counts(args.r, nterms - 1)
        rec = guess_recurrence(seq, args.max_order, args.max_degree)
        if rec is None:
            print("no recurrence found within the bounds", file=sys.stderr)
            return EXIT_INSUFFICIENT
        cache.store("recurrence", args.r, params, rec.to_json())
    if args.format == "json":
        _emit_json(
            "guess",
            {"r": args.r, **params},
            {"recurrence": rec.to_json(), "status": "empirically-verified"},
        )
    else:
        print(rec)
        print("status: empirically-verified")
    return EXIT_OK


def cmd_asympt(args):
    from .asymptotics import AsymptoticReport

    cache = Cache(args.cache_dir, enabled=not args.no_cache)
    params = {"nmax": args.nmax, "tol": args.tol}
    cached = cache.load("report", args.r, params)
    if cached is not None:
        cached["n_range"] = tuple(cached["n_range"])
        report = AsymptoticReport(**cached)
    else:
        report = conjecture_check(args.r, nmax=args.nmax, tol=args.tol)
        cache.store("report", args.r, params, report.to_json())
    if args.format == "json":
        _emit_json("asympt", {"r": args.r, **params}, report.to_json())
    else:
        print(report_table([report]))
    return EXIT_OK if report.passed else EXIT_VERIFICATION


def build_parser():
    parser = argparse.ArgumentParser(
        prog="avoidwords",
        description="count 123-avoiding words with fixed letter multiplicities, "
        "derive the algebraic equations their generating functions satisfy, "
        "guess recurrences, and check the growth law",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("text", "json")):
        p.add_argument("--r", type=int, required=True, help="occurrences of each letter")
        p.add_argument("--format", choices=list(formats), default="text")
        p.add_argument("--cache-dir", default=None, help="cache directory (env AVOIDWORDS_CACHE_DIR)")
        p.add_argument("--no-cache", action="store_true")

    p = sub.add_parser("count", help="print w_r(0..nmax)")
    add_common(p, formats=("text", "json", "bfile"))
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument(
        "--method",
        choices=["brute", "recurrence", "scheme", "linear-rec"],
        default="scheme",
    )
    p.add_argument("--cap", type=int, default=12, help="brute-force total length cap")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("scheme", help="print the equation system")
    add_common(p)
    p.set_defaults(func=cmd_scheme)

    p = sub.add_parser("eliminate", help="derive the algebraic equation for f_r")
    add_common(p)
    p.add_argument("--backend", choices=["buchberger", "resultants"], default="resultants")
    p.add_argument("--timeout", type=float, default=120.0)
    p.add_argument("--unbounded", action="store_true", help="no time limit (r=4 and up)")
    p.set_defaults(func=cmd_eliminate)

    p = sub.add_parser("guess", help="guess a recurrence (or algebraic equation)")
    add_common(p)
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--algebraic", action="store_true")
    p.add_argument("--max-deg-x", type=int, default=4)
    p.add_argument("--max-deg-f", type=int, default=8)
    p.set_defaults(func=cmd_guess)

    p = sub.add_parser("asympt", help="growth-rate and constant report")
    add_common(p)
    p.add_argument("--nmax", type=int, default=2000)
    p.add_argument("--tol", type=float, default=0.01)
    p.set_defaults(func=cmd_asympt)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BruteForceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except EliminationTimeout as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except InsufficientTermsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INSUFFICIENT
    except EmptyEliminationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
