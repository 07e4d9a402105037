"""The descent-count triangle and its generating polynomials.

Two independent construction routes are kept deliberately separate so each
can check the other:

  * an integer recurrence on triangle entries,
        T(n, i) = i * T(n-1, i) + (2n - i) * T(n-1, i-1),   T(1, 1) = 1,
    with out-of-range entries read as 0; and
  * a derivative recurrence on the generating polynomials themselves,
        P_n(x) = (x - x^2) P_(n-1)'(x) + (2n - 1) x P_(n-1)(x),  P_1(x) = x.

Row n counts Stirling permutations of order n by number of descents
(equally: plateaux, or ascents) of the statistic value i = 1..n; it sums to
(2n - 1)!!. Rows and polynomials are memoized for the lifetime of the
process.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .polynomial import IntPolynomial

_ROWS: list[tuple[int, ...]] = [(1,)]
_POLYS: list[IntPolynomial] = [IntPolynomial((0, 1))]

_X = IntPolynomial((0, 1))
_X_MINUS_X2 = IntPolynomial((0, 1, -1))
_ONE_MINUS_X = IntPolynomial((1, -1))


def triangle_row(n: int) -> tuple[int, ...]:
    """Entries (T(n,1), ..., T(n,n)) by the integer recurrence."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    while len(_ROWS) < n:
        prev = _ROWS[-1]
        m = len(_ROWS) + 1
        row = []
        for i in range(1, m + 1):
            keep = i * prev[i - 1] if i <= len(prev) else 0
            carry = (2 * m - i) * prev[i - 2] if i >= 2 else 0
            row.append(keep + carry)
        _ROWS.append(tuple(row))
    return _ROWS[n - 1]


def triangle_rows(n_max: int) -> list[tuple[int, ...]]:
    """Rows 1..n_max."""
    triangle_row(n_max)
    return _ROWS[:n_max]


def descent_polynomial(n: int) -> IntPolynomial:
    """The generating polynomial of row n, built by the derivative
    recurrence (independent of ``triangle_row``)."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    while len(_POLYS) < n:
        prev = _POLYS[-1]
        m = len(_POLYS) + 1
        _POLYS.append(_X_MINUS_X2 * prev.derivative() + (2 * m - 1) * (_X * prev))
    return _POLYS[n - 1]


def wilf_form_check(n: int) -> bool:
    """Exact identity behind the product-derivative rearrangement of the
    polynomial recurrence.

    The rearrangement itself involves the non-polynomial factor
    (1 - x)^(1 - 2n), so the check multiplies through by (1 - x)^(2n - 1)
    and compares integer polynomials:

      P_n(x) (1-x)^(2n-2) = x (1-x)^(2n-1) P_(n-1)'(x)
                            + (2n-1) x (1-x)^(2n-2) P_(n-1)(x)
    """
    if n < 2:
        raise ValueError(f"check needs order >= 2, got {n}")
    p_prev = descent_polynomial(n - 1)
    p_cur = descent_polynomial(n)
    om_small = _ONE_MINUS_X ** (2 * n - 2)
    lhs = p_cur * om_small
    rhs = _X * (om_small * _ONE_MINUS_X) * p_prev.derivative() + (
        (2 * n - 1) * (_X * om_small * p_prev)
    )
    return lhs == rhs


@dataclass(frozen=True)
class ModeReport:
    """Where the maximal entries of row n sit, against the unit-distance
    bound around the mean statistic value."""

    order: int
    mean: Fraction
    argmax_indices: tuple[int, ...]
    predicted_indices: tuple[int, ...]

    @property
    def within_unit_of_mean(self) -> bool:
        return all(abs(self.mean - m) < 1 for m in self.argmax_indices)

    @property
    def argmax_in_predicted(self) -> bool:
        return set(self.argmax_indices) <= set(self.predicted_indices)


def locate_mode(n: int) -> ModeReport:
    """Argmax indices of row n and the predicted peak locations.

    The mean statistic value is (2n + 1)/3; real-rootedness forces every
    peak within distance 1 of it, so the predicted set is {(2n+1)/3} when
    that is an integer and {floor, ceil} otherwise. Ties are reported as a
    set, never broken.
    """
    row = triangle_row(n)
    top = max(row)
    argmax = tuple(i for i, v in enumerate(row, start=1) if v == top)
    mean = Fraction(2 * n + 1, 3)
    if mean.denominator == 1:
        predicted = (int(mean),)
    else:
        floor = int(mean)
        predicted = (floor, floor + 1)
    return ModeReport(n, mean, argmax, predicted)


# --- export formats ---------------------------------------------------------

def triangle_csv(n_max: int) -> str:
    lines = ["n,i,count"]
    for n, row in enumerate(triangle_rows(n_max), start=1):
        for i, count in enumerate(row, start=1):
            lines.append(f"{n},{i},{count}")
    return "\n".join(lines) + "\n"


def parse_triangle_csv(text: str) -> list[tuple[int, ...]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "n,i,count":
        raise ValueError("missing 'n,i,count' header")
    rows: dict[int, dict[int, int]] = {}
    for ln in lines[1:]:
        n_s, i_s, c_s = ln.split(",")
        rows.setdefault(int(n_s), {})[int(i_s)] = int(c_s)
    out = []
    for n in range(1, len(rows) + 1):
        entries = rows[n]
        out.append(tuple(entries[i] for i in range(1, n + 1)))
    return out


def triangle_json(n_max: int) -> str:
    rows = [list(row) for row in triangle_rows(n_max)]
    return json.dumps(rows, separators=(",", ":")) + "\n"


def parse_triangle_json(text: str) -> list[tuple[int, ...]]:
    return [tuple(row) for row in json.loads(text)]


def save_triangle_cache(path: str, n_max: int) -> None:
    """Cache file: one line per row, space-separated decimal integers, the
    first integer being the row length n (which length-prefixes the rest)."""
    with open(path, "w", encoding="ascii") as fh:
        for row in triangle_rows(n_max):
            fh.write(" ".join([str(len(row))] + [str(c) for c in row]) + "\n")


def load_triangle_cache(path: str) -> list[tuple[int, ...]]:
    rows: list[tuple[int, ...]] = []
    with open(path, encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = [int(tok) for tok in line.split()]
            if not parts or parts[0] != len(parts) - 1 or parts[0] != lineno:
                raise ValueError(f"corrupt triangle cache at line {lineno}")
            rows.append(tuple(parts[1:]))
    return rows
