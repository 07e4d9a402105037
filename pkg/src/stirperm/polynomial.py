"""Exact arithmetic kernel: dense integer-coefficient polynomials.

Scalars are plain Python ints and ``fractions.Fraction`` (arbitrary
precision, always lowest terms, positive denominator), which already meet
the exactness requirements, so this module only adds the polynomial layer.
No floating point appears anywhere; every operation is pure and every value
immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def double_factorial(n: int) -> int:
    """1 * 3 * ... * (2n-1): the number of Stirling permutations of order n."""
    if n < 1:
        raise ValueError(f"order must be a positive integer, got {n}")
    result = 1
    for odd in range(3, 2 * n, 2):
        result *= odd
    return result


class IntPolynomial:
    """Dense univariate polynomial with integer coefficients.

    ``coefficients[i]`` holds the coefficient of x**i. The tuple is kept
    canonical: no trailing zeros, and the zero polynomial is the empty tuple.
    ``degree()`` of the zero polynomial is None, a distinguished stand-in for
    minus infinity that cannot be mistaken for the degree of a constant.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = list(coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        if degree < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls((0,) * degree + (coefficient,))

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def leading_coefficient(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def constant_coefficient(self) -> int:
        return self._coeffs[0] if self._coeffs else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return IntPolynomial(summed)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self._coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self._coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntPolynomial()
        prod = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    prod[i + j] += ca * cb
        return IntPolynomial(prod)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPolynomial((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self._coeffs) if i)

    def __call__(self, x: Scalar) -> Scalar:
        """Horner evaluation; exact for int and Fraction arguments."""
        acc: Scalar = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def divide_by_x(self) -> "IntPolynomial":
        """Shift coefficients down one degree; requires constant term zero."""
        if self._coeffs and self._coeffs[0] != 0:
            raise ValueError(
                f"cannot divide by x: constant coefficient is {self._coeffs[0]}"
            )
        return IntPolynomial(self._coeffs[1:])

    def content(self) -> int:
        """gcd of the absolute coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._coeffs:
            g = gcd(g, abs(c))
            if g == 1:
                break
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content; a positive scaling, so signs are kept."""
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial(c // g for c in self._coeffs)

    def sign_at(self, numerator: int, denominator: int = 1) -> int:
        """Exact sign of the value at numerator/denominator (denominator > 0).

        Works homogeneously in integers, avoiding Fraction normalization on
        the hot path of sign-variation counting.
        """
        if denominator <= 0:
            raise ValueError("denominator must be positive")
        if not self._coeffs:
            return 0
        acc = self._coeffs[-1]
        power = 1
        for i in range(len(self._coeffs) - 2, -1, -1):
            power *= denominator
            acc = acc * numerator + self._coeffs[i] * power
        return (acc > 0) - (acc < 0)

    def sign_towards_infinity(self, positive: bool) -> int:
        """Sign of the value for x -> +inf (or -inf when positive=False)."""
        if not self._coeffs:
            return 0
        s = 1 if self._coeffs[-1] > 0 else -1
        if not positive and (len(self._coeffs) - 1) % 2 == 1:
            s = -s
        return s

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)
