"""Exact descent/plateau/ascent statistics of Stirling permutations.

Core surface: the permutation type with validation, enumeration and uniform
sampling; the statistic triangle built by two independent recurrences;
Sturm-chain certificates that each generating polynomial has distinct real
non-positive roots and that consecutive ones interlace; and exact moment
identities with measured convergence of the standardized statistic to the
normal distribution.
"""

from .distribution import (
    Moments,
    NormalizedDistribution,
    PlateauIndicator,
    indicator_pair_step_checks,
    ks_distance_empirical,
    ks_distance_exact,
    moments_exact,
    normalized_distribution,
    plateau_probability,
    sample_statistic_histogram,
    second_moments_by_recurrence,
    sum_identity_check,
)
from .permutations import (
    InvalidPermutation,
    MAX_ENUMERATION_ORDER,
    ResourceLimitExceeded,
    StatCounts,
    StirlingPermutation,
    brute_force_triangle,
    enumerate_permutations,
    enumerate_words,
    sample_uniform,
    word_statistics,
)
from .polynomial import IntPolynomial, double_factorial
from .rng import SplitMix64
from .sturm import (
    CertificationError,
    InterlaceCertificate,
    RealRootCertificate,
    SturmChain,
    certify_real_roots,
    count_real_roots,
    interlace_certificate,
    sturm_chain,
)
from .triangle import (
    ModeReport,
    descent_polynomial,
    locate_mode,
    triangle_row,
    triangle_rows,
    wilf_form_check,
)

__version__ = "0.1.0"

__all__ = [
    "CertificationError",
    "IntPolynomial",
    "InterlaceCertificate",
    "InvalidPermutation",
    "MAX_ENUMERATION_ORDER",
    "ModeReport",
    "Moments",
    "NormalizedDistribution",
    "PlateauIndicator",
    "RealRootCertificate",
    "ResourceLimitExceeded",
    "SplitMix64",
    "StatCounts",
    "StirlingPermutation",
    "SturmChain",
    "brute_force_triangle",
    "certify_real_roots",
    "count_real_roots",
    "descent_polynomial",
    "double_factorial",
    "enumerate_permutations",
    "enumerate_words",
    "indicator_pair_step_checks",
    "interlace_certificate",
    "ks_distance_empirical",
    "ks_distance_exact",
    "locate_mode",
    "moments_exact",
    "normalized_distribution",
    "plateau_probability",
    "sample_statistic_histogram",
    "sample_uniform",
    "second_moments_by_recurrence",
    "sturm_chain",
    "sum_identity_check",
    "triangle_row",
    "triangle_rows",
    "wilf_form_check",
    "word_statistics",
]
