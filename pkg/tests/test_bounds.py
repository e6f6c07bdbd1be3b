from fractions import Fraction

import pytest

from diagpack.bounds import (
    DivisibilityError,
    closed_form_D,
    d1_exact,
    d2_upper,
    d3_upper,
    m_l_floor,
    report,
    upper_bound_sum,
)
from diagpack.construction import build_l_arrangement
from diagpack.grid_core import GridSpec
from diagpack.oracle import path_dp


def test_m_l_floor_examples():
    for l in range(1, 12):
        assert m_l_floor(l + 1, l) == 1
    assert m_l_floor(10, 2) == 3
    assert m_l_floor(2, 2) == 0
    with pytest.raises(ValueError):
        m_l_floor(0, 1)


def test_m_l_floor_matches_dp():
    for l in range(1, 11):
        for k in range(1, 61):
            assert m_l_floor(k, l) == path_dp(k, l).value


@pytest.mark.parametrize("n, l, value", [(9, 2, 27), (4, 1, 10), (2, 2, 1), (4, 3, 3), (8, 2, 21)])
def test_upper_bound_sum(n, l, value):
    assert upper_bound_sum(n, l) == value


@pytest.mark.parametrize("n, l, value", [(6, 2, 12), (4, 1, 10), (4, 3, 3), (9, 2, 27)])
def test_closed_form_D(n, l, value):
    assert closed_form_D(n, l) == value


def test_sandwich_closes():
    for l in range(1, 7):
        for n in range(l + 1, 37, l + 1):
            upper = upper_bound_sum(n, l)
            assert upper == closed_form_D(n, l)
            assert build_l_arrangement(GridSpec(n, l)).count == upper


def test_d1():
    assert [d1_exact(n) for n in (2, 4, 6)] == [3, 10, 21]
    for n in range(2, 37, 2):
        assert d1_exact(n) == upper_bound_sum(n, 1) == closed_form_D(n, 1)
    with pytest.raises(DivisibilityError):
        d1_exact(3)


def test_d2():
    assert d2_upper(3) == (Fraction(11, 3), 3)
    assert d2_upper(6) == (Fraction(38, 3), 12)
    assert d2_upper(9).final == 27 == closed_form_D(9, 2)
    with pytest.raises(DivisibilityError):
        d2_upper(4)


def test_d3():
    assert d3_upper(4) == (Fraction(13, 4), 3)
    assert d3_upper(8).final == 14
    assert d3_upper(12).final == 33
    with pytest.raises(DivisibilityError):
        d3_upper(6)


def test_rational_bounds_dominate_floor_sum():
    for n in range(3, 121, 3):
        assert upper_bound_sum(n, 2) <= d2_upper(n).intermediate
    for n in range(4, 121, 4):
        assert upper_bound_sum(n, 3) <= d3_upper(n).intermediate


def test_report():
    assert report(9, 2).as_dict() == {"n": 9, "l": 2, "lower": 27, "upper": 27, "closed": 27, "divisible": True}
    r = report(8, 2)
    assert (r.lower_construction, r.upper_path_sum, r.closed_form, r.divisible) == (21, 21, None, False)
    r = report(2, 2)
    assert (r.lower_construction, r.upper_path_sum, r.closed_form) == (1, 1, None)


def test_report_lower_never_exceeds_upper():
    for n in range(1, 40):
        for l in range(1, min(n, 8) + 1):
            r = report(n, l)
            assert r.lower_construction <= r.upper_path_sum
            if r.divisible:
                assert r.lower_construction == r.upper_path_sum == r.closed_form
