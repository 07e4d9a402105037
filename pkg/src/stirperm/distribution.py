"""Exact moments and normal-convergence measurements for the plateau count.

The statistic is the number of plateaux of a uniform random Stirling
permutation of order n; by the triangle equality it is equidistributed with
the descent and ascent counts, so one probability mass function serves all
three labels. Means, second moments and variances are closed-form
rationals:

    mean        (2n + 1) / 3
    E(count^2)  (8n^3 + 6n^2 - 2n - 3) / (18n - 9)
    variance    (2n^2 - 2) / (18n - 9)

and every identity below is checked in exact rational arithmetic. Floating
point enters only at the last step of a distribution distance, where exact
rationals meet the normal CDF.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

from .permutations import (
    MAX_ENUMERATION_ORDER,
    enumerate_words,
    word_statistics,
)
from .polynomial import double_factorial
from .rng import SplitMix64
from .special import normal_cdf
from .triangle import triangle_row


@dataclass(frozen=True)
class Moments:
    order: int
    mean: Fraction
    second_moment: Fraction
    variance: Fraction

    @property
    def sigma(self) -> float:
        """Display-only standard deviation."""
        return sqrt(float(self.variance))


def moments_exact(n: int) -> Moments:
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    mean = Fraction(2 * n + 1, 3)
    second = Fraction(8 * n**3 + 6 * n**2 - 2 * n - 3, 18 * n - 9)
    return Moments(n, mean, second, second - mean * mean)


def second_moments_by_recurrence(n_max: int) -> list[Fraction]:
    """E(count^2) for orders 1..n_max via the one-step recurrence

        s_(n+1) = (2n - 1)/(2n + 1) * s_n + (4n + 4)/3,   s_1 = 1,

    an independent route that must agree with the closed form termwise."""
    if n_max < 1:
        raise ValueError(f"order must be >= 1, got {n_max}")
    values = [Fraction(1)]
    for n in range(1, n_max):
        values.append(
            Fraction(2 * n - 1, 2 * n + 1) * values[-1] + Fraction(4 * n + 4, 3)
        )
    return values


def brute_force_moments(n: int) -> tuple[Fraction, Fraction]:
    """(mean, second moment) of the plateau count by full enumeration."""
    total = 0
    square_total = 0
    population = 0
    for word in enumerate_words(n):
        p = word_statistics(word).plateaux
        total += p
        square_total += p * p
        population += 1
    return Fraction(total, population), Fraction(square_total, population)


# --- plateau indicator variables --------------------------------------------

@dataclass(frozen=True)
class PlateauIndicator:
    """Probability that the two copies of ``value`` sit adjacent in a
    uniform order-n permutation."""

    order: int
    value: int
    probability: Fraction


def plateau_probability(n: int, value: int) -> PlateauIndicator:
    """Exact adjacency probability from the telescoping product

        P(copies of n-i adjacent) = prod_(j=1..i) (2n - 2j) / (2n - 2j + 1),

    the empty product (value = n) being 1: the top pair is always adjacent,
    and each insertion of a larger pair keeps an adjacency alive with
    probability (gaps not splitting it) / (all gaps)."""
    if not 1 <= value <= n:
        raise ValueError(f"value must be in 1..{n}, got {value}")
    prob = Fraction(1)
    for j in range(1, n - value + 1):
        prob *= Fraction(2 * n - 2 * j, 2 * n - 2 * j + 1)
    return PlateauIndicator(n, value, prob)


def sum_identity_check(n: int) -> bool:
    """Adjacency probabilities over all values must sum to the mean plateau
    count (2n + 1)/3; exact rational accumulation."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    total = Fraction(0)
    product = Fraction(1)
    for i in range(n):  # i-th summand covers value n - i
        if i > 0:
            product *= Fraction(2 * n - 2 * i, 2 * n - 2 * i + 1)
        total += product
    return total == Fraction(2 * n + 1, 3)


def indicator_expectations(
    n: int,
) -> tuple[dict[int, Fraction], dict[tuple[int, int], Fraction]]:
    """Single-pass enumeration oracle: adjacency probability of each value,
    and joint adjacency probability of each unordered value pair."""
    population = double_factorial(n)
    singles = [0] * (n + 1)
    pairs: dict[tuple[int, int], int] = {}
    for word in enumerate_words(n):
        here = [word[j] for j in range(len(word) - 1) if word[j] == word[j + 1]]
        for a in here:
            singles[a] += 1
        for idx, a in enumerate(here):
            for b in here[idx + 1 :]:
                key = (a, b) if a < b else (b, a)
                pairs[key] = pairs.get(key, 0) + 1
    single_probs = {
        i: Fraction(singles[i], population) for i in range(1, n + 1)
    }
    pair_probs = {key: Fraction(v, population) for key, v in pairs.items()}
    return single_probs, pair_probs


def indicator_pair_step_checks(n: int) -> bool:
    """Verify the three insertion-step identities for adjacency indicators
    between orders n and n+1 by double enumeration, exactly:

      1. joint adjacency of values i != j <= n scales by (2n-1)/(2n+1)
      2. adjacency of a value i <= n scales by 2n/(2n+1)
      3. jointly with the top value n+1, adjacency of i is unchanged
         (the top pair is always adjacent)
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n + 1 > MAX_ENUMERATION_ORDER:
        raise ValueError(
            f"check needs enumeration of order {n + 1}, above the cap"
        )
    single_n, pair_n = indicator_expectations(n)
    single_up, pair_up = indicator_expectations(n + 1)
    if single_up[n + 1] != 1:
        return False
    step_pair = Fraction(2 * n - 1, 2 * n + 1)
    step_single = Fraction(2 * n, 2 * n + 1)
    for i in range(1, n + 1):
        if single_up[i] != step_single * single_n[i]:
            return False
        for j in range(i + 1, n + 1):
            left = pair_up.get((i, j), Fraction(0))
            right = step_pair * pair_n.get((i, j), Fraction(0))
            if left != right:
                return False
    for i in range(1, n + 2):
        joint = (
            pair_up.get((i, n + 1), Fraction(0))
            if i <= n
            else single_up[n + 1]
        )
        if joint != single_up[i]:
            return False
    return True


# --- standardized distribution and distances --------------------------------

@dataclass(frozen=True)
class NormalizedDistribution:
    """Exact pmf of the statistic on values 1..n, with the standardized
    support points (value - mean)/sigma."""

    order: int
    pmf: tuple[Fraction, ...]
    mean: Fraction
    variance: Fraction
    standardized_support: tuple[float, ...]


def _standardized_point(value: int, mean: Fraction, variance: Fraction) -> float:
    # (value - mean)/sqrt(variance) with one exact rational square, so the
    # only roundings are the final float conversion and one sqrt
    offset = value - mean
    magnitude = sqrt(float(offset * offset / variance))
    return magnitude if offset > 0 else (-magnitude if offset < 0 else 0.0)


def normalized_distribution(n: int) -> NormalizedDistribution:
    if n < 2:
        raise ValueError(
            f"order must be >= 2 to standardize (variance is 0 at 1), got {n}"
        )
    row = triangle_row(n)
    population = double_factorial(n)
    pmf = tuple(Fraction(c, population) for c in row)
    m = moments_exact(n)
    support = tuple(
        _standardized_point(k, m.mean, m.variance) for k in range(1, n + 1)
    )
    return NormalizedDistribution(n, pmf, m.mean, m.variance, support)


def ks_distance_exact(n: int) -> float:
    """Sup distance between the standardized exact distribution's step CDF
    and the standard normal CDF, evaluated from both sides of every jump."""
    dist = normalized_distribution(n)
    worst = 0.0
    cumulative = Fraction(0)
    for weight, t in zip(dist.pmf, dist.standardized_support):
        phi = normal_cdf(t)
        below = abs(float(cumulative) - phi)
        cumulative += weight
        above = abs(float(cumulative) - phi)
        worst = max(worst, below, above)
    return worst


def sample_statistic_histogram(
    n: int, samples: int, seed: int
) -> tuple[int, ...]:
    """Histogram (index = plateau count 0..n) of ``samples`` independent
    uniform order-n permutations, without materializing any words.

    Uniform insertion touches the plateau count alone through one question
    per step: of the 2k + 1 gaps of the current order-k word, does the
    chosen one split an existing adjacent pair (count stays) or not (count
    grows by one)? Exactly ``count`` gaps split a pair, so drawing a
    uniform gap index and comparing it with the running count reproduces
    the statistic's law exactly while skipping the O(n) word surgery per
    step. Seeds give bit-identical histograms across runs.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if samples < 1:
        raise ValueError(f"need at least one sample, got {samples}")
    rng = SplitMix64(seed)
    below = rng.below
    histogram = [0] * (n + 1)
    for _ in range(samples):
        count = 1
        for k in range(1, n):
            if below(2 * k + 1) >= count:
                count += 1
        histogram[count] += 1
    return tuple(histogram)


def ks_distance_empirical(n: int, samples: int, seed: int) -> float:
    """Sup distance between the standardized empirical distribution of the
    statistic and the standard normal CDF; deterministic given the seed."""
    if n < 2:
        raise ValueError(f"order must be >= 2 to standardize, got {n}")
    histogram = sample_statistic_histogram(n, samples, seed)
    m = moments_exact(n)
    worst = 0.0
    seen = 0
    for value in range(1, n + 1):
        if histogram[value] == 0:
            continue
        phi = normal_cdf(_standardized_point(value, m.mean, m.variance))
        below = abs(seen / samples - phi)
        seen += histogram[value]
        above = abs(seen / samples - phi)
        worst = max(worst, below, above)
    return worst
