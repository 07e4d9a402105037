from fractions import Fraction

import pytest

from stirperm.polynomial import IntPolynomial
from stirperm.sturm import (
    CertificationError,
    SturmChain,
    certify_real_roots,
    count_real_roots,
    interlace_certificate,
    interlace_certificate_json,
    isolate_roots,
    pseudo_remainder,
    real_root_certificate_json,
    refine_interval,
    root_magnitude_bound,
    sturm_chain,
)
from stirperm.triangle import descent_polynomial

X = IntPolynomial([0, 1])


def _exact_remainder(a, b):
    """Rational-arithmetic polynomial remainder, as an independent check."""
    ra = [Fraction(c) for c in a.coefficients]
    rb = [Fraction(c) for c in b.coefficients]
    while len(ra) - 1 >= len(rb) - 1 and any(ra):
        while ra and ra[-1] == 0:
            ra.pop()
        if len(ra) < len(rb):
            break
        factor = ra[-1] / rb[-1]
        shift = len(ra) - len(rb)
        for i, c in enumerate(rb):
            ra[shift + i] -= factor * c
        ra.pop()
    while ra and ra[-1] == 0:
        ra.pop()
    return ra


@pytest.mark.parametrize(
    "a,b",
    [
        (IntPolynomial([0, 1, 2]), IntPolynomial([1, 4])),
        (IntPolynomial([3, -2, 0, 5]), IntPolynomial([-1, 2, -7])),
        (IntPolynomial([1, 1, 1, 1, 1]), IntPolynomial([2, -3])),
        (IntPolynomial([4, 0, -6, 1]), IntPolynomial([0, 0, -2])),
    ],
)
def test_pseudo_remainder_has_exact_remainder_signs(a, b):
    rem = pseudo_remainder(a, b)
    exact = _exact_remainder(a, b)
    for point in (Fraction(0), Fraction(1), Fraction(-3, 2), Fraction(7, 3)):
        exact_value = sum(c * point**i for i, c in enumerate(exact))
        sign = (exact_value > 0) - (exact_value < 0)
        assert rem.sign_at(point.numerator, point.denominator) == sign


def test_chain_of_x():
    chain = sturm_chain(X)
    assert [p.coefficients for p in chain.polynomials] == [(0, 1), (1,)]


def test_chain_of_squarefree_quadratic_ends_in_constant():
    chain = sturm_chain(IntPolynomial([0, 1, 2]))  # x(2x + 1), distinct roots
    assert chain.is_squarefree()
    assert chain.polynomials[-1].degree() == 0


def test_chain_of_repeated_root_ends_above_constant():
    chain = sturm_chain(IntPolynomial([0, 0, 1]))  # x^2
    assert not chain.is_squarefree()
    assert chain.polynomials[-1].degree() == 1


def test_chain_rejects_zero():
    with pytest.raises(ValueError):
        sturm_chain(IntPolynomial())


def test_count_real_roots_examples():
    assert count_real_roots(IntPolynomial([0, 1, 2]), None, Fraction(0)) == 2
    assert count_real_roots(IntPolynomial([0, 1, 8, 6]), None, Fraction(0)) == 3
    assert count_real_roots(IntPolynomial([1, 0, 1])) == 0
    assert count_real_roots(IntPolynomial([0, 0, 1])) == 1  # distinct count
    assert count_real_roots(IntPolynomial([-4, 0, 1]), Fraction(0), None) == 1


def test_count_interval_endpoints_are_half_open():
    p = X  # single root at 0
    assert count_real_roots(p, Fraction(-1), Fraction(0)) == 1  # includes 0
    assert count_real_roots(p, Fraction(0), Fraction(1)) == 0  # excludes 0
    with pytest.raises(ValueError):
        count_real_roots(p, Fraction(1), Fraction(0))


def test_root_magnitude_bound_brackets_roots():
    p = IntPolynomial([-6, 1, 1])  # roots 2 and -3
    bound = root_magnitude_bound(p)
    assert bound > 3
    assert count_real_roots(p, -bound, bound) == 2


def test_isolate_roots_against_known_roots():
    # (x + 3)(2x + 1)x = 2x^3 + 7x^2 + 3x has roots -3, -1/2, 0
    p = IntPolynomial([0, 3, 7, 2])
    chain = SturmChain(p)
    intervals = isolate_roots(chain, Fraction(-10), Fraction(0))
    assert len(intervals) == 3
    for (lo, hi), root in zip(intervals, (Fraction(-3), Fraction(-1, 2), 0)):
        assert lo < root <= hi


def test_refine_interval_narrows_and_keeps_root():
    p = IntPolynomial([-2, 0, 1])  # sqrt(2) in (1, 2]
    chain = SturmChain(p)
    lo, hi = refine_interval(chain, Fraction(1), Fraction(2), Fraction(1, 1000))
    assert hi - lo <= Fraction(1, 1000)
    assert chain.count_roots(lo, hi) == 1
    assert lo < Fraction(141421, 100000) < hi


def test_certificate_order_one_and_two():
    cert = certify_real_roots(1)
    assert cert.distinct_real_root_count == 1
    (lo, hi), = cert.isolating_intervals
    assert lo < 0 <= hi
    cert2 = certify_real_roots(2)
    assert cert2.distinct_real_root_count == 2
    first, second = cert2.isolating_intervals
    assert first[0] < Fraction(-1, 2) <= first[1]
    assert second[0] < Fraction(0) <= second[1]


def test_certificate_order_five():
    cert = certify_real_roots(5)
    assert cert.distinct_real_root_count == 5
    assert cert.all_nonpositive and cert.squarefree
    bound = root_magnitude_bound(descent_polynomial(5))
    for lo, hi in cert.isolating_intervals:
        assert -bound <= lo < hi <= 0


def test_certificate_intervals_disjoint_with_sign_change():
    cert = certify_real_roots(9)
    p = descent_polynomial(9)
    intervals = cert.isolating_intervals
    for i in range(len(intervals) - 1):
        assert intervals[i][1] <= intervals[i + 1][0]
    for lo, hi in intervals:
        s_lo = p.sign_at(lo.numerator, lo.denominator)
        s_hi = p.sign_at(hi.numerator, hi.denominator)
        assert s_lo != 0  # left endpoints are never roots (half-open)
        assert s_lo * s_hi <= 0


def test_certificate_range_small():
    for n in range(1, 21):
        cert = certify_real_roots(n)
        assert cert.distinct_real_root_count == n
        assert len(cert.isolating_intervals) == n


def test_certification_failure_reports_structure(monkeypatch):
    import stirperm.sturm as sturm_module

    monkeypatch.setattr(
        sturm_module, "descent_polynomial", lambda n: IntPolynomial([1, 0, 1])
    )
    sturm_module._chain_for_order.cache_clear()
    with pytest.raises(CertificationError) as exc:
        certify_real_roots(4)
    assert exc.value.report["stage"] == "distinct real root count"
    assert exc.value.report["expected"] == 4
    assert exc.value.report["observed"] == 0
    monkeypatch.undo()
    sturm_module._chain_for_order.cache_clear()


def test_interlace_vacuous_at_order_two():
    cert = interlace_certificate(2)
    assert cert.verified
    assert cert.witnesses == ()


def test_interlace_order_three_brackets_known_root():
    # the reduced order-2 polynomial has its single root at -1/2
    cert = interlace_certificate(3)
    assert cert.verified
    assert len(cert.witnesses) == 2
    below, above = cert.witnesses
    assert below.upper < Fraction(-1, 2) <= above.lower
    for witness in cert.witnesses:
        assert witness.root_count == 1
        assert witness.sign_at_lower * witness.sign_at_upper < 0


def test_interlace_verified_through_order_twelve():
    for n in range(2, 13):
        cert = interlace_certificate(n)
        assert cert.verified, cert.failure
        assert len(cert.witnesses) == (0 if n == 2 else n - 1)


def test_interlace_rejects_tiny_order():
    with pytest.raises(ValueError):
        interlace_certificate(1)


def test_float_root_finder_diagnostic_agrees():
    numpy = pytest.importorskip("numpy")
    for n in range(1, 17):
        p = descent_polynomial(n)
        roots = numpy.roots(list(reversed(p.coefficients)))
        real = [r for r in roots if abs(r.imag) < 1e-9]
        assert len(real) == n
        assert all(r.real < 1e-9 for r in real)
        assert count_real_roots(p) == n


def test_certificate_json_shape():
    import json

    payload = json.loads(real_root_certificate_json(certify_real_roots(3)))
    assert payload["n"] == 3
    assert payload["count"] == 3
    assert payload["squarefree"] is True
    assert payload["verified"] is True
    assert len(payload["intervals"]) == 3
    assert all(len(entry) == 4 for entry in payload["intervals"])
    inter = json.loads(interlace_certificate_json(interlace_certificate(3)))
    assert inter["n"] == 3 and inter["verified"] is True
    assert len(inter["witnesses"]) == 2
