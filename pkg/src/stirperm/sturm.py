"""Exact real-root counting, isolation, and certification.

Everything here is a calculation a referee could replay by hand: chains of
integer polynomials, rational interval endpoints, and signs obtained by
homogeneous integer evaluation. Floating point appears nowhere.

The chain of p is p_0 = p, p_1 = p', p_(k+1) = -rem(p_(k-1), p_k), with each
remainder rescaled to a primitive integer polynomial. Both the pseudo-
remainder multiplier and the content divisor are kept positive, so the sign
pattern at every point is the same as for the exact rational chain and the
classical sign-variation count applies: variations(a) - variations(b) is
the number of distinct real roots in the half-open interval (a, b]. The
count is correct even at endpoints where p vanishes, and for non-squarefree
p it counts distinct roots (the chain then ends at a gcd-like element of
positive degree instead of a constant).

Isolation brackets all roots with the classical bound
L = 1 + max|coeff| / |leading coeff|, pre-splits at powers of two (root
magnitudes of the certified polynomials span many binades, and integer
endpoints keep evaluations cheap), then bisects until every interval holds
exactly one root.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polynomial import IntPolynomial
from .triangle import descent_polynomial

_REFINE_GUARD = 4096  # bisection steps before declaring non-termination


class CertificationError(RuntimeError):
    """A certification check failed; ``report`` says which and how."""

    def __init__(self, report: dict):
        super().__init__(json.dumps(report, sort_keys=True, default=str))
        self.report = report


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Integer remainder of a by b, scaled by a *positive* power of the
    leading coefficient so that its sign at every point matches the exact
    rational remainder's."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    da, db = a.degree(), b.degree()
    if da is None or da < db:
        return a
    lead = b.leading_coefficient()
    bc = b.coefficients
    work = list(a.coefficients)
    steps = da - db + 1
    for _ in range(steps):
        if len(work) - 1 < db:
            work = [c * lead for c in work]
            continue
        top = work.pop()
        work = [c * lead for c in work]
        offset = len(work) - db
        for i in range(db):
            work[offset + i] -= top * bc[i]
        while work and work[-1] == 0:
            work.pop()
    if lead < 0 and steps % 2 == 1:
        work = [-c for c in work]
    return IntPolynomial(work)


class SturmChain:
    """Signed-remainder chain of one polynomial, with memoized
    sign-variation counts."""

    __slots__ = ("polynomials", "_cache")

    def __init__(self, p: IntPolynomial):
        if p.is_zero():
            raise ValueError("Sturm chain of the zero polynomial is undefined")
        chain = [p.primitive()]
        derivative = p.derivative()
        if not derivative.is_zero():
            chain.append(derivative.primitive())
            while True:
                rem = pseudo_remainder(chain[-2], chain[-1])
                if rem.is_zero():
                    break
                chain.append((-rem).primitive())
                if chain[-1].degree() == 0:
                    break
        self.polynomials = tuple(chain)
        self._cache: dict[Fraction, int] = {}

    def is_squarefree(self) -> bool:
        """Constant final element <=> gcd(p, p') is constant <=> all roots
        simple (degree >= 1 assumed)."""
        return self.polynomials[-1].degree() == 0

    def variations_at(self, point: Fraction) -> int:
        cached = self._cache.get(point)
        if cached is not None:
            return cached
        num, den = point.numerator, point.denominator
        count = _variations(p.sign_at(num, den) for p in self.polynomials)
        self._cache[point] = count
        return count

    def variations_towards(self, positive: bool) -> int:
        return _variations(
            p.sign_towards_infinity(positive) for p in self.polynomials
        )

    def count_roots(self, lower: Fraction | None, upper: Fraction | None) -> int:
        """Distinct real roots in (lower, upper]; None means unbounded."""
        if lower is not None and upper is not None and lower >= upper:
            raise ValueError(f"empty interval: lower {lower} >= upper {upper}")
        at_lower = (
            self.variations_towards(positive=False)
            if lower is None
            else self.variations_at(lower)
        )
        at_upper = (
            self.variations_towards(positive=True)
            if upper is None
            else self.variations_at(upper)
        )
        return at_lower - at_upper


def _variations(signs) -> int:
    count = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def sturm_chain(p: IntPolynomial) -> SturmChain:
    return SturmChain(p)


def count_real_roots(
    p: IntPolynomial,
    lower: Fraction | None = None,
    upper: Fraction | None = None,
) -> int:
    """Distinct real roots of p in (lower, upper]; None bounds are infinite."""
    return SturmChain(p).count_roots(lower, upper)


def root_magnitude_bound(p: IntPolynomial) -> Fraction:
    """1 + max|coeff|/|lead|: every root r satisfies |r| < this bound."""
    if p.is_zero() or p.degree() == 0:
        raise ValueError("root bound needs degree >= 1")
    lead = abs(p.leading_coefficient())
    biggest = max(abs(c) for c in p.coefficients)
    return 1 + Fraction(biggest, lead)


def isolate_roots(
    chain: SturmChain, lower: Fraction, upper: Fraction
) -> list[tuple[Fraction, Fraction]]:
    """Disjoint half-open intervals (lo, hi], ascending, each holding
    exactly one distinct root, jointly holding every root in (lower, upper]."""
    segments: list[tuple[Fraction, Fraction, int]] = []
    cut_points = [lower]
    binade = 0
    while Fraction(-(1 << binade)) > lower:  # pre-split at -2^k inside range
        cut_points.append(Fraction(-(1 << binade)))
        binade += 1
    cut_points = sorted(p for p in cut_points if lower <= p < upper)
    cut_points.append(upper)
    for a, b in zip(cut_points, cut_points[1:]):
        roots_here = chain.count_roots(a, b)
        if roots_here:
            segments.append((a, b, roots_here))
    isolated: list[tuple[Fraction, Fraction]] = []
    while segments:
        a, b, roots_here = segments.pop()
        if roots_here == 1:
            isolated.append((a, b))
            continue
        mid = (a + b) / 2
        left = chain.count_roots(a, mid)
        right = roots_here - left
        if left:
            segments.append((a, mid, left))
        if right:
            segments.append((mid, b, right))
    isolated.sort()
    return isolated


def refine_interval(
    chain: SturmChain, lower: Fraction, upper: Fraction, width: Fraction
) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval below the requested width (display
    helper; certification never needs a width)."""
    if width <= 0:
        raise ValueError("width must be positive")
    while upper - lower > width:
        mid = (lower + upper) / 2
        if chain.count_roots(lower, mid) == 1:
            upper = mid
        else:
            lower = mid
    return lower, upper


@dataclass(frozen=True)
class RealRootCertificate:
    """Evidence that the order-n descent polynomial has n distinct real
    non-positive roots, with isolating intervals."""

    order: int
    distinct_real_root_count: int
    all_nonpositive: bool
    squarefree: bool
    isolating_intervals: tuple[tuple[Fraction, Fraction], ...]


@lru_cache(maxsize=None)
def _chain_for_order(n: int) -> SturmChain:
    return SturmChain(descent_polynomial(n))


@lru_cache(maxsize=None)
def _reduced_chain_for_order(n: int) -> SturmChain:
    # the descent polynomial always vanishes at 0; this is the cofactor
    return SturmChain(descent_polynomial(n).divide_by_x())


def certify_real_roots(
    n: int, width: Fraction | None = None
) -> RealRootCertificate:
    """Certify that the order-n descent polynomial has n distinct real
    roots, none positive, and isolate each one.

    The non-positivity check is an independent count on (0, +inf), not an
    assumption used by the bracketing. ``width`` optionally refines the
    isolating intervals for display; certification itself needs no epsilon.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    chain = _chain_for_order(n)

    def fail(stage: str, expected, observed):
        raise CertificationError(
            {
                "order": n,
                "stage": stage,
                "expected": expected,
                "observed": observed,
            }
        )

    total = chain.count_roots(None, None)
    if total != n:
        fail("distinct real root count", n, total)
    positive = chain.count_roots(Fraction(0), None)
    if positive != 0:
        fail("roots in (0, +inf)", 0, positive)
    if not chain.is_squarefree():
        fail("squarefree (all roots simple)", True, False)
    bound = root_magnitude_bound(chain.polynomials[0])
    intervals = isolate_roots(chain, -bound, Fraction(0))
    if len(intervals) != n:
        fail("isolating interval count", n, len(intervals))
    if width is not None:
        intervals = [
            refine_interval(chain, lo, hi, width) for lo, hi in intervals
        ]
    return RealRootCertificate(
        order=n,
        distinct_real_root_count=total,
        all_nonpositive=(positive == 0),
        squarefree=True,
        isolating_intervals=tuple(intervals),
    )


@dataclass(frozen=True)
class GapWitness:
    """One gap of the interlacing pattern: the reduced order-n polynomial
    changes sign (and holds exactly one root) strictly between consecutive
    roots of the reduced order-(n-1) polynomial, or beyond its extreme
    ones."""

    lower: Fraction
    upper: Fraction
    sign_at_lower: int
    sign_at_upper: int
    root_count: int


@dataclass(frozen=True)
class InterlaceCertificate:
    order: int
    verified: bool
    witnesses: tuple[GapWitness, ...]
    failure: str | None = None


def interlace_certificate(n: int) -> InterlaceCertificate:
    """Certify that the roots of consecutive descent polynomials strictly
    interlace, once the root both share at the origin is divided out.

    With the n-2 roots of the reduced order-(n-1) polynomial isolated in
    intervals free of roots of the reduced order-n polynomial, the line
    splits into n-1 gaps (left of the smallest, between consecutive ones,
    right of the largest, up to 0). A sign change of the order-n polynomial
    across each gap plus its total root count of n-1 forces exactly one
    root strictly inside every gap, which is strict interlacing.
    """
    if n < 2:
        raise ValueError(f"interlacing needs order >= 2, got {n}")
    if n == 2:
        # the reduced order-1 polynomial is the constant 1: nothing to
        # interlace with
        return InterlaceCertificate(order=2, verified=True, witnesses=())

    prev_chain = _reduced_chain_for_order(n - 1)
    cur_chain = _reduced_chain_for_order(n)

    prev_total = prev_chain.count_roots(None, None)
    cur_total = cur_chain.count_roots(None, None)
    if prev_total != n - 2 or cur_total != n - 1:
        return InterlaceCertificate(
            order=n,
            verified=False,
            witnesses=(),
            failure=f"reduced root counts ({prev_total}, {cur_total}) != "
            f"({n - 2}, {n - 1})",
        )

    bound = max(
        root_magnitude_bound(prev_chain.polynomials[0]),
        root_magnitude_bound(cur_chain.polynomials[0]),
    )
    prev_intervals = isolate_roots(prev_chain, -bound, Fraction(0))

    # shrink each isolating interval until it is free of order-n roots, so
    # gap endpoints certifiably separate the two root sets
    cleaned: list[tuple[Fraction, Fraction]] = []
    for lo, hi in prev_intervals:
        for _ in range(_REFINE_GUARD):
            if cur_chain.count_roots(lo, hi) == 0:
                break
            mid = (lo + hi) / 2
            if prev_chain.count_roots(lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        else:
            raise CertificationError(
                {
                    "order": n,
                    "stage": "interval refinement",
                    "detail": "could not separate root near "
                    f"({lo}, {hi}]; shared root suspected",
                }
            )
        cleaned.append((lo, hi))

    fenceposts = [-bound]
    for lo, hi in cleaned:
        fenceposts.extend((lo, hi))
    fenceposts.append(Fraction(0))

    witnesses = []
    bad_gap = None
    poly = cur_chain.polynomials[0]
    for g in range(len(cleaned) + 1):
        u = fenceposts[2 * g]
        v = fenceposts[2 * g + 1]
        witness = GapWitness(
            lower=u,
            upper=v,
            sign_at_lower=poly.sign_at(u.numerator, u.denominator),
            sign_at_upper=poly.sign_at(v.numerator, v.denominator),
            root_count=cur_chain.count_roots(u, v),
        )
        witnesses.append(witness)
        if witness.root_count != 1 and bad_gap is None:
            bad_gap = g
    if bad_gap is not None:
        return InterlaceCertificate(
            order=n,
            verified=False,
            witnesses=tuple(witnesses),
            failure=f"gap {bad_gap} holds {witnesses[bad_gap].root_count} "
            "roots instead of 1",
        )
    return InterlaceCertificate(order=n, verified=True, witnesses=tuple(witnesses))


# --- export formats ---------------------------------------------------------

def real_root_certificate_payload(cert: RealRootCertificate) -> dict:
    return {
        "n": cert.order,
        "count": cert.distinct_real_root_count,
        "squarefree": cert.squarefree,
        "intervals": [
            [lo.numerator, lo.denominator, hi.numerator, hi.denominator]
            for lo, hi in cert.isolating_intervals
        ],
        "verified": cert.all_nonpositive
        and cert.squarefree
        and cert.distinct_real_root_count == cert.order,
    }


def interlace_certificate_payload(cert: InterlaceCertificate) -> dict:
    payload = {
        "n": cert.order,
        "verified": cert.verified,
        "witnesses": [
            {
                "lower": [w.lower.numerator, w.lower.denominator],
                "upper": [w.upper.numerator, w.upper.denominator],
                "sign_at_lower": w.sign_at_lower,
                "sign_at_upper": w.sign_at_upper,
                "root_count": w.root_count,
            }
            for w in cert.witnesses
        ],
    }
    if cert.failure is not None:
        payload["failure"] = cert.failure
    return payload


def real_root_certificate_json(cert: RealRootCertificate) -> str:
    payload = real_root_certificate_payload(cert)
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def interlace_certificate_json(cert: InterlaceCertificate) -> str:
    payload = interlace_certificate_payload(cert)
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
