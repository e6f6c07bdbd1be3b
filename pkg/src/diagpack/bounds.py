"""Subpath packing counts and the closed-form bounds built on them.

Every positive diagonal lies on exactly one lattice line x - y = c, and two
diagonals on different lines never meet.  On a line with k vertices a
packing is a set of vertex-disjoint runs of l+1 consecutive vertices, so
the line holds at most floor(k / (l+1)) diagonals.  Summing that over all
lines gives the upper bound used here.

Rational intermediate bounds are kept as exact ``Fraction`` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .construction import DivisibilityError, _require_multiple, build_l_arrangement
from .grid_core import GridSpec


class RationalBound(NamedTuple):
    intermediate: Fraction
    final: int


@dataclass(frozen=True)
class BoundsReport:
    n: int
    l: int
    lower_construction: int
    upper_path_sum: int
    closed_form: Optional[int]
    divisible: bool

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "lower": self.lower_construction,
            "upper": self.upper_path_sum,
            "closed": self.closed_form,
            "divisible": self.divisible,
        }


def m_l_floor(k: int, l: int) -> int:
    """Maximum number of vertex-disjoint (l+1)-vertex subpaths of a k-vertex path."""
    if k < 1 or l < 1:
        raise ValueError(f"need k >= 1 and l >= 1, got k={k}, l={l}")
    return k // (l + 1)


def upper_bound_sum(n: int, l: int) -> int:
    """floor((n+1)/(l+1)) + 2 * sum_{j=2..n} floor(j/(l+1)).

    One central line with n+1 vertices plus two lines of every shorter length
    down to 2 vertices.
    """
    if n < 1 or l < 1:
        raise ValueError(f"need n >= 1 and l >= 1, got n={n}, l={l}")
    return (n + 1) // (l + 1) + 2 * sum(j // (l + 1) for j in range(2, n + 1))


def closed_form_D(n: int, l: int) -> int:
    _require_multiple(n, l + 1, "closed_form_D")
    return (n * n - n * (l - 2)) // (l + 1)


def d1_exact(n: int) -> int:
    _require_multiple(n, 2, "d1_exact")
    return (n * n + n) // 2


def d2_upper(n: int) -> RationalBound:
    """Return ((n^2+2)/3, n^2/3) and check that the floor of the first is the second."""
    _require_multiple(n, 3, "d2_upper")
    intermediate = Fraction(n * n + 2, 3)
    final = n * n // 3
    if intermediate.numerator // intermediate.denominator != final:
        raise ArithmeticError(f"floor identity failed for n={n}")
    return RationalBound(intermediate, final)


def d3_upper(n: int) -> RationalBound:
    """Return ((n^2-n+1)/4, (n^2-n)/4) and check the floor identity."""
    _require_multiple(n, 4, "d3_upper")
    intermediate = Fraction(n * n - n + 1, 4)
    final = (n * n - n) // 4
    if intermediate.numerator // intermediate.denominator != final:
        raise ArithmeticError(f"floor identity failed for n={n}")
    return RationalBound(intermediate, final)


def report(n: int, l: int) -> BoundsReport:
    grid = GridSpec(n, l)
    if l > n:
        raise ValueError(f"need l <= n, got n={n}, l={l}")
    lower = build_l_arrangement(grid).count
    upper = upper_bound_sum(n, l)
    if lower > upper:
        raise AssertionError(f"construction {lower} exceeds upper bound {upper} at n={n}, l={l}")
    divisible = n % (l + 1) == 0
    closed = closed_form_D(n, l) if divisible else None
    return BoundsReport(n, l, lower, upper, closed, divisible)


__all__ = [
    "BoundsReport",
    "DivisibilityError",
    "RationalBound",
    "closed_form_D",
    "d1_exact",
    "d2_upper",
    "d3_upper",
    "m_l_floor",
    "report",
    "upper_bound_sum",
]
