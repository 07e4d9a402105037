"""Named verification suites behind the ``verify`` CLI command.

Each suite re-derives a family of facts two independent ways and compares
exactly; ``quick`` trims ranges for a fast smoke run. Results come back as
flat CheckResult records so callers can print one line per check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import distribution, sturm, triangle
from .permutations import (
    STAT_LABELS,
    brute_force_triangle,
    enumerate_words,
    sample_word,
)
from .polynomial import double_factorial
from .rng import SplitMix64
from .special import chi_square_sf

#: Exact standardized sup-distances to the normal CDF, recorded from this
#: package's exact pipeline and frozen; the convergence suite re-derives
#: and compares against these to 1e-9.
GOLDEN_KS_EXACT = {
    10: 0.18587095509696128,
    20: 0.13501386784884567,
    50: 0.08602472468892292,
    100: 0.060893160882176944,
    200: 0.04319155495774113,
}

SAMPLER_SEEDS = (1, 2, 3)
SAMPLER_SIGNIFICANCE = 1e-3

_FULL = {
    "triangle_rows": 200,
    "oracle_orders": 7,
    "polynomial_orders": 200,
    "wilf_orders": 60,
    "mode_orders": 200,
    "certify_orders": 60,
    "interlace_orders": 30,
    "moment_orders": 1000,
    "brute_moment_orders": 7,
    "indicator_orders": 6,
    "sum_identity_orders": 500,
    "plateau_oracle_orders": 7,
    "sampler_samples": 150_000,
    "sampler_seeds": SAMPLER_SEEDS,
    "clt_orders": (10, 20, 50, 100, 200),
    "check_golden": True,
}

_QUICK = {
    "triangle_rows": 60,
    "oracle_orders": 6,
    "polynomial_orders": 60,
    "wilf_orders": 16,
    "mode_orders": 60,
    "certify_orders": 12,
    "interlace_orders": 8,
    "moment_orders": 200,
    "brute_moment_orders": 6,
    "indicator_orders": 4,
    "sum_identity_orders": 100,
    "plateau_oracle_orders": 6,
    "sampler_samples": 20_000,
    "sampler_seeds": (1,),
    "clt_orders": (10, 20, 50),
    "check_golden": False,
}


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _first_failure(pairs) -> str:
    for tag, ok in pairs:
        if not ok:
            return f"first failure: {tag}"
    return ""


def _suite_triangle(p) -> list[CheckResult]:
    out = []
    sums = [
        (n, sum(triangle.triangle_row(n)) == double_factorial(n))
        for n in range(1, p["triangle_rows"] + 1)
    ]
    out.append(
        CheckResult(
            "triangle",
            f"row sums equal (2n-1)!! for n <= {p['triangle_rows']}",
            all(ok for _, ok in sums),
            _first_failure(sums),
        )
    )
    oracle = []
    for n in range(1, p["oracle_orders"] + 1):
        row = triangle.triangle_row(n)
        for stat in STAT_LABELS:
            oracle.append(
                (f"n={n} {stat}", row == brute_force_triangle(n, stat))
            )
    out.append(
        CheckResult(
            "triangle",
            "recurrence row = enumeration counts for descents/plateaux/"
            f"ascents, n <= {p['oracle_orders']}",
            all(ok for _, ok in oracle),
            _first_failure(oracle),
        )
    )
    agree = []
    ones = []
    means = []
    for n in range(1, p["polynomial_orders"] + 1):
        poly = triangle.descent_polynomial(n)
        row = triangle.triangle_row(n)
        agree.append((f"n={n}", poly.coefficients == (0,) + row))
        ones.append((f"n={n}", poly(1) == double_factorial(n)))
        means.append(
            (
                f"n={n}",
                Fraction(poly.derivative()(1), poly(1))
                == Fraction(2 * n + 1, 3),
            )
        )
    out.append(
        CheckResult(
            "triangle",
            f"polynomial route matches triangle route, n <= {p['polynomial_orders']}",
            all(ok for _, ok in agree),
            _first_failure(agree),
        )
    )
    out.append(
        CheckResult(
            "triangle",
            "value at 1 equals (2n-1)!!",
            all(ok for _, ok in ones),
            _first_failure(ones),
        )
    )
    out.append(
        CheckResult(
            "triangle",
            "mean statistic value equals (2n+1)/3 exactly",
            all(ok for _, ok in means),
            _first_failure(means),
        )
    )
    wilf = [
        (f"n={n}", triangle.wilf_form_check(n))
        for n in range(2, p["wilf_orders"] + 1)
    ]
    out.append(
        CheckResult(
            "triangle",
            f"cleared-denominator product-derivative identity, n <= {p['wilf_orders']}",
            all(ok for _, ok in wilf),
            _first_failure(wilf),
        )
    )
    modes = []
    for n in range(1, p["mode_orders"] + 1):
        report = triangle.locate_mode(n)
        modes.append(
            (
                f"n={n}",
                report.within_unit_of_mean and report.argmax_in_predicted,
            )
        )
    out.append(
        CheckResult(
            "triangle",
            f"peaks within 1 of mean and matching two-case pattern, n <= {p['mode_orders']}",
            all(ok for _, ok in modes),
            _first_failure(modes),
        )
    )
    return out


def _suite_realroots(p) -> list[CheckResult]:
    out = []
    results = []
    for n in range(1, p["certify_orders"] + 1):
        try:
            cert = sturm.certify_real_roots(n)
        except sturm.CertificationError as exc:
            results.append((f"n={n}: {exc.report}", False))
            continue
        intervals = cert.isolating_intervals
        disjoint = all(
            intervals[i][1] <= intervals[i + 1][0]
            for i in range(len(intervals) - 1)
        )
        nonpositive = all(hi <= 0 for _, hi in intervals)
        results.append(
            (
                f"n={n}",
                cert.distinct_real_root_count == n
                and cert.all_nonpositive
                and cert.squarefree
                and disjoint
                and nonpositive,
            )
        )
    out.append(
        CheckResult(
            "realroots",
            f"n distinct real non-positive roots certified, n <= {p['certify_orders']}",
            all(ok for _, ok in results),
            _first_failure(results),
        )
    )
    return out


def _suite_interlace(p) -> list[CheckResult]:
    results = []
    for n in range(2, p["interlace_orders"] + 1):
        cert = sturm.interlace_certificate(n)
        tag = f"n={n}" + (f": {cert.failure}" if cert.failure else "")
        results.append((tag, cert.verified))
    return [
        CheckResult(
            "interlace",
            f"consecutive reduced polynomials strictly interlace, n <= {p['interlace_orders']}",
            all(ok for _, ok in results),
            _first_failure(results),
        )
    ]


def _suite_moments(p) -> list[CheckResult]:
    out = []
    recurrence = distribution.second_moments_by_recurrence(p["moment_orders"])
    closed = []
    variances = []
    for n in range(1, p["moment_orders"] + 1):
        m = distribution.moments_exact(n)
        closed.append((f"n={n}", recurrence[n - 1] == m.second_moment))
        variances.append(
            (
                f"n={n}",
                m.variance == Fraction(2 * n * n - 2, 18 * n - 9)
                and m.variance == m.second_moment - m.mean**2,
            )
        )
    out.append(
        CheckResult(
            "moments",
            f"second-moment recurrence equals closed form, n <= {p['moment_orders']}",
            all(ok for _, ok in closed),
            _first_failure(closed),
        )
    )
    out.append(
        CheckResult(
            "moments",
            "variance closed form consistent",
            all(ok for _, ok in variances),
            _first_failure(variances),
        )
    )
    brute = []
    for n in range(1, p["brute_moment_orders"] + 1):
        mean, second = distribution.brute_force_moments(n)
        m = distribution.moments_exact(n)
        brute.append(
            (f"n={n}", mean == m.mean and second == m.second_moment)
        )
    out.append(
        CheckResult(
            "moments",
            f"brute-force mean/second moment match, n <= {p['brute_moment_orders']}",
            all(ok for _, ok in brute),
            _first_failure(brute),
        )
    )
    growth = []
    prev = distribution.moments_exact(2).variance
    for n in range(3, p["moment_orders"] + 1):
        var = distribution.moments_exact(n).variance
        ok = var > prev
        if n >= 10:
            ok = ok and var > Fraction(n, 10)
        growth.append((f"n={n}", ok))
        prev = var
    out.append(
        CheckResult(
            "moments",
            f"variance strictly increasing (and > n/10 from 10 on), n <= {p['moment_orders']}",
            all(ok for _, ok in growth),
            _first_failure(growth),
        )
    )
    return out


def _suite_identities(p) -> list[CheckResult]:
    out = []
    steps = [
        (f"n={n}", distribution.indicator_pair_step_checks(n))
        for n in range(1, p["indicator_orders"] + 1)
    ]
    out.append(
        CheckResult(
            "identities",
            f"insertion-step indicator identities, n <= {p['indicator_orders']}",
            all(ok for _, ok in steps),
            _first_failure(steps),
        )
    )
    sums = [
        (f"n={n}", distribution.sum_identity_check(n))
        for n in range(1, p["sum_identity_orders"] + 1)
    ]
    out.append(
        CheckResult(
            "identities",
            f"adjacency probabilities sum to (2n+1)/3, n <= {p['sum_identity_orders']}",
            all(ok for _, ok in sums),
            _first_failure(sums),
        )
    )
    oracle = []
    for n in range(1, p["plateau_oracle_orders"] + 1):
        singles, _ = distribution.indicator_expectations(n)
        for value in range(1, n + 1):
            oracle.append(
                (
                    f"n={n} value={value}",
                    distribution.plateau_probability(n, value).probability
                    == singles[value],
                )
            )
    out.append(
        CheckResult(
            "identities",
            f"product formula matches enumerated adjacency, n <= {p['plateau_oracle_orders']}",
            all(ok for _, ok in oracle),
            _first_failure(oracle),
        )
    )
    return out


def sampler_uniformity_pvalue(n: int, samples: int, seed: int) -> float:
    """Chi-square goodness-of-fit p-value of the uniform sampler against
    exact enumeration of all order-n words."""
    outcomes = {word: 0 for word in enumerate_words(n)}
    rng = SplitMix64(seed)
    for _ in range(samples):
        outcomes[sample_word(n, rng)] += 1
    expected = samples / len(outcomes)
    statistic = sum(
        (observed - expected) ** 2 / expected for observed in outcomes.values()
    )
    return chi_square_sf(statistic, len(outcomes) - 1)


def _suite_sampler(p) -> list[CheckResult]:
    out = []
    fits = []
    for order in (2, 3):
        for seed in p["sampler_seeds"]:
            pvalue = sampler_uniformity_pvalue(order, p["sampler_samples"], seed)
            fits.append(
                (
                    f"order={order} seed={seed} p={pvalue:.4g}",
                    pvalue > SAMPLER_SIGNIFICANCE,
                )
            )
    out.append(
        CheckResult(
            "sampler",
            f"chi-square uniformity at significance {SAMPLER_SIGNIFICANCE}, "
            f"{p['sampler_samples']} samples, seeds {p['sampler_seeds']}",
            all(ok for _, ok in fits),
            _first_failure(fits),
        )
    )
    seed = p["sampler_seeds"][0]
    rerun_same = distribution.sample_statistic_histogram(
        12, 2000, seed
    ) == distribution.sample_statistic_histogram(12, 2000, seed)
    word_same = sample_word(9, SplitMix64(seed)) == sample_word(
        9, SplitMix64(seed)
    )
    out.append(
        CheckResult(
            "sampler",
            "fixed seed reproduces bit-identical draws",
            rerun_same and word_same,
        )
    )
    return out


def _suite_clt(p) -> list[CheckResult]:
    out = []
    distances = [(n, distribution.ks_distance_exact(n)) for n in p["clt_orders"]]
    decreasing = all(
        distances[i][1] > distances[i + 1][1] for i in range(len(distances) - 1)
    )
    out.append(
        CheckResult(
            "clt",
            "exact normal distance strictly decreases over "
            + ",".join(str(n) for n in p["clt_orders"]),
            decreasing,
            " ".join(f"D({n})={d:.6g}" for n, d in distances),
        )
    )
    if p["check_golden"]:
        golden = [
            (f"n={n}", abs(d - GOLDEN_KS_EXACT[n]) < 1e-9)
            for n, d in distances
            if n in GOLDEN_KS_EXACT
        ]
        out.append(
            CheckResult(
                "clt",
                "exact distances match frozen golden values to 1e-9",
                all(ok for _, ok in golden),
                _first_failure(golden),
            )
        )
    return out


_SUITES = {
    "triangle": _suite_triangle,
    "realroots": _suite_realroots,
    "interlace": _suite_interlace,
    "moments": _suite_moments,
    "identities": _suite_identities,
    "sampler": _suite_sampler,
    "clt": _suite_clt,
}

SUITE_NAMES = ("all",) + tuple(_SUITES)


def run_suite(name: str, quick: bool = False) -> list[CheckResult]:
    if name != "all" and name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    params = _QUICK if quick else _FULL
    suites = _SUITES.values() if name == "all" else (_SUITES[name],)
    results: list[CheckResult] = []
    for suite in suites:
        results.extend(suite(params))
    return results
