"""Command-line front end.

Commands: triangle, poly, roots, moments, normality, mode, sample, verify.
Exit codes: 0 ok, 1 verification or certification failure, 2 usage error,
3 resource refusal. Every command is deterministic given its full flag set;
sampling commands require an explicit --seed (there is no ambient
randomness anywhere in the package).

Exact rationals are rendered as "num/den" in CSV and as [num, den] pairs in
JSON; any decimal shown sits next to its exact form, never instead of it.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import distribution, sturm, triangle, verify
from .permutations import (
    ResourceLimitExceeded,
    STAT_LABELS,
    brute_force_triangle,
    format_word,
    sample_word,
    word_statistics,
)
from .rng import SplitMix64
from .special import normal_pdf

#: Largest order accepted for exact distribution distances (the triangle
#: build is quadratic in the order).
EXACT_DISTANCE_ORDER_CAP = 5000

_ORACLE_ORDER_CAP = 8


class UsageError(Exception):
    pass


def _json_dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _fraction_pair(q: Fraction) -> list[int]:
    return [q.numerator, q.denominator]


def _fraction_text(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"expected an integer or num/den rational, got {text!r}"
        ) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _write(out_path, text: str) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _add_common(parser, fmt=True, out=True) -> None:
    if fmt:
        parser.add_argument(
            "--format", choices=("csv", "json"), default="csv",
            help="output format (default csv)",
        )
    if out:
        parser.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stirperm",
        description="Exact descent/plateau statistics of Stirling permutations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="statistic triangle rows 1..n")
    p.add_argument("--n-max", type=_positive_int, required=True)
    p.add_argument("--stat", choices=STAT_LABELS, default="descents")
    p.add_argument(
        "--oracle", action="store_true",
        help="also enumerate (orders <= 8) and compare; exit 1 on mismatch",
    )
    p.add_argument("--cache", help="triangle cache file to reuse/refresh")
    _add_common(p)

    p = sub.add_parser("poly", help="generating polynomial of one row")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--wilf", action="store_true",
                   help="include the product-derivative identity check (json only)")
    p.add_argument("--eval", type=_parse_fraction, metavar="RAT",
                   help="also evaluate at this rational point (json only)")
    _add_common(p)

    p = sub.add_parser("roots", help="real-rootedness certificate (json)")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--interlace", action="store_true",
                   help="also certify interlacing with the previous order")
    p.add_argument("--width", type=_parse_fraction, metavar="RAT",
                   help="refine isolating intervals below this width for display")
    _add_common(p, fmt=False)

    p = sub.add_parser("moments", help="exact mean/variance/second moment")
    p.add_argument("--n", type=_positive_int, required=True)
    _add_common(p)

    p = sub.add_parser("normality", help="distance to the normal distribution")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--samples", type=_positive_int,
                   help="add a Monte-Carlo estimate with this many samples")
    p.add_argument("--seed", type=int, help="seed (required with --samples)")
    p.add_argument("--no-exact", action="store_true",
                   help="skip the exact distance (for very large orders)")
    p.add_argument("--plot-out", metavar="PATH",
                   help="write standardized pmf as two-column CSV (t,density)")
    p.add_argument("--plot-normal-out", metavar="PATH",
                   help="write normal density samples as two-column CSV (t,density)")
    _add_common(p)

    p = sub.add_parser("mode", help="peak location of one triangle row")
    p.add_argument("--n", type=_positive_int, required=True)
    _add_common(p)

    p = sub.add_parser("sample", help="stream uniform random permutations")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--count", type=_positive_int, default=1)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--stats", action="store_true",
                   help="emit ascent/descent/plateau counts instead of words")
    _add_common(p, fmt=False)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=verify.SUITE_NAMES, default="all")
    p.add_argument("--quick", action="store_true",
                   help="trimmed ranges for a fast smoke run")

    return parser


def _cmd_triangle(args) -> int:
    rows = None
    if args.cache:
        try:
            cached = triangle.load_triangle_cache(args.cache)
            if len(cached) >= args.n_max:
                rows = cached[: args.n_max]
        except (OSError, ValueError):
            rows = None
    if rows is None:
        rows = triangle.triangle_rows(args.n_max)
        if args.cache:
            triangle.save_triangle_cache(args.cache, args.n_max)
    if args.oracle:
        for n in range(1, min(args.n_max, _ORACLE_ORDER_CAP) + 1):
            expected = brute_force_triangle(n, args.stat)
            if tuple(rows[n - 1]) != expected:
                sys.stderr.write(
                    f"oracle disagreement at n={n}: recurrence {rows[n - 1]} "
                    f"vs enumeration {expected}\n"
                )
                return 1
        sys.stderr.write(
            f"oracle agreement for {args.stat}, n <= "
            f"{min(args.n_max, _ORACLE_ORDER_CAP)}\n"
        )
    if args.format == "json":
        text = _json_dumps([list(row) for row in rows])
    else:
        lines = ["n,i,count"]
        for n, row in enumerate(rows, start=1):
            lines.extend(f"{n},{i},{c}" for i, c in enumerate(row, start=1))
        text = "\n".join(lines) + "\n"
    _write(args.out, text)
    return 0


def _cmd_poly(args) -> int:
    if args.format == "csv" and (args.wilf or args.eval is not None):
        raise UsageError("--wilf and --eval need --format json")
    poly = triangle.descent_polynomial(args.n)
    if args.format == "csv":
        lines = ["i,coefficient"]
        lines.extend(f"{i},{c}" for i, c in enumerate(poly.coefficients))
        _write(args.out, "\n".join(lines) + "\n")
        return 0
    payload = {"n": args.n, "coefficients": list(poly.coefficients)}
    if args.wilf:
        if args.n < 2:
            raise UsageError("--wilf needs --n >= 2")
        payload["wilf_identity"] = triangle.wilf_form_check(args.n)
    if args.eval is not None:
        value = poly(args.eval)
        payload["evaluation"] = {
            "point": _fraction_pair(args.eval),
            "value": _fraction_pair(Fraction(value)),
        }
    _write(args.out, _json_dumps(payload))
    return 0


def _cmd_roots(args) -> int:
    try:
        cert = sturm.certify_real_roots(args.n, width=args.width)
    except sturm.CertificationError as exc:
        sys.stderr.write(_json_dumps({"certification_failure": exc.report}))
        return 1
    payload = sturm.real_root_certificate_payload(cert)
    status = 0
    if args.interlace:
        if args.n < 2:
            raise UsageError("--interlace needs --n >= 2")
        inter = sturm.interlace_certificate(args.n)
        payload = {
            "real_roots": payload,
            "interlacing": sturm.interlace_certificate_payload(inter),
        }
        if not inter.verified:
            status = 1
    _write(args.out, _json_dumps(payload))
    return status


def _moments_payload(n: int) -> dict:
    m = distribution.moments_exact(n)
    return {
        "n": n,
        "mean": _fraction_pair(m.mean),
        "variance": _fraction_pair(m.variance),
        "s_n": _fraction_pair(m.second_moment),
        "mean_decimal": float(m.mean),
        "variance_decimal": float(m.variance),
        "sigma": m.sigma,
    }


def _cmd_moments(args) -> int:
    if args.format == "json":
        _write(args.out, _json_dumps(_moments_payload(args.n)))
        return 0
    m = distribution.moments_exact(args.n)
    text = (
        "n,mean,variance,s_n\n"
        f"{args.n},{_fraction_text(m.mean)},{_fraction_text(m.variance)},"
        f"{_fraction_text(m.second_moment)}\n"
    )
    _write(args.out, text)
    return 0


def _cmd_normality(args) -> int:
    if args.n < 2:
        raise UsageError("normality needs --n >= 2 (order 1 is degenerate)")
    if args.samples is not None and args.seed is None:
        raise UsageError("--samples requires --seed (no ambient randomness)")
    if args.no_exact and args.samples is None:
        raise UsageError("--no-exact without --samples leaves nothing to do")
    payload = _moments_payload(args.n)
    if not args.no_exact:
        if args.n > EXACT_DISTANCE_ORDER_CAP:
            raise ResourceLimitExceeded(
                f"exact distance refused above order {EXACT_DISTANCE_ORDER_CAP}; "
                "use --no-exact with --samples"
            )
        payload["ks_exact"] = distribution.ks_distance_exact(args.n)
    if args.samples is not None:
        payload["ks_empirical"] = distribution.ks_distance_empirical(
            args.n, args.samples, args.seed
        )
        payload["samples"] = args.samples
        payload["seed"] = args.seed
    if args.plot_out or args.plot_normal_out:
        dist = distribution.normalized_distribution(args.n)
        sigma = distribution.moments_exact(args.n).sigma
        if args.plot_out:
            lines = ["t,density"]
            lines.extend(
                f"{t!r},{float(p) * sigma!r}"
                for t, p in zip(dist.standardized_support, dist.pmf)
            )
            _write(args.plot_out, "\n".join(lines) + "\n")
        if args.plot_normal_out:
            lo = dist.standardized_support[0] - 1.0
            hi = dist.standardized_support[-1] + 1.0
            lines = ["t,density"]
            steps = 200
            for k in range(steps + 1):
                t = lo + (hi - lo) * k / steps
                lines.append(f"{t!r},{normal_pdf(t)!r}")
            _write(args.plot_normal_out, "\n".join(lines) + "\n")
    if args.format == "json":
        _write(args.out, _json_dumps(payload))
        return 0
    columns = ["n", "mean", "variance", "s_n"]
    values = [
        str(args.n),
        _fraction_text(distribution.moments_exact(args.n).mean),
        _fraction_text(distribution.moments_exact(args.n).variance),
        _fraction_text(distribution.moments_exact(args.n).second_moment),
    ]
    for key in ("ks_exact", "ks_empirical"):
        if key in payload:
            columns.append(key)
            values.append(repr(payload[key]))
    _write(args.out, ",".join(columns) + "\n" + ",".join(values) + "\n")
    return 0


def _cmd_mode(args) -> int:
    report = triangle.locate_mode(args.n)
    if args.format == "json":
        payload = {
            "n": report.order,
            "mean": _fraction_pair(report.mean),
            "argmax": list(report.argmax_indices),
            "predicted": list(report.predicted_indices),
            "within_unit_of_mean": report.within_unit_of_mean,
            "argmax_in_predicted": report.argmax_in_predicted,
        }
        _write(args.out, _json_dumps(payload))
        return 0
    text = (
        "n,mean,argmax,predicted\n"
        f"{report.order},{_fraction_text(report.mean)},"
        f"{' '.join(map(str, report.argmax_indices))},"
        f"{' '.join(map(str, report.predicted_indices))}\n"
    )
    _write(args.out, text)
    return 0


def _cmd_sample(args) -> int:
    rng = SplitMix64(args.seed)
    lines = []
    if args.stats:
        lines.append("ascents,descents,plateaux")
        for _ in range(args.count):
            s = word_statistics(sample_word(args.n, rng))
            lines.append(f"{s.ascents},{s.descents},{s.plateaux}")
    else:
        for _ in range(args.count):
            lines.append(format_word(sample_word(args.n, rng)))
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_suite(args.suite, quick=args.quick)
    failures = 0
    for r in results:
        tag = "PASS" if r.passed else "FAIL"
        detail = f"  [{r.detail}]" if r.detail else ""
        sys.stdout.write(f"{tag}  {r.suite}: {r.name}{detail}\n")
        failures += not r.passed
    sys.stdout.write(
        f"{len(results) - failures}/{len(results)} checks passed"
        f" ({args.suite}{', quick' if args.quick else ''})\n"
    )
    return 1 if failures else 0


_HANDLERS = {
    "triangle": _cmd_triangle,
    "poly": _cmd_poly,
    "roots": _cmd_roots,
    "moments": _cmd_moments,
    "normality": _cmd_normality,
    "mode": _cmd_mode,
    "sample": _cmd_sample,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    except ResourceLimitExceeded as exc:
        sys.stderr.write(f"{parser.prog}: resource refusal: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
