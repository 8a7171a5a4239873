from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from fmzv.series import MultiTruncSeries, TruncSeries, series_compose, series_div, series_mul

F = Fraction


def exp_series(c, N):
    return TruncSeries([F(c) ** n / factorial(n) for n in range(N + 1)])


def one_minus_exp_neg(N):
    return TruncSeries([F(0)] + [-F(-1) ** n / factorial(n) for n in range(1, N + 1)])


def test_difference_of_squares():
    a = TruncSeries([1, 1, 0])
    b = TruncSeries([1, -1, 0])
    assert series_mul(a, b).coeffs == (1, 0, -1)


def test_identity_and_exp():
    a = TruncSeries([F(3), F(-1), F(2, 7)])
    assert a * TruncSeries.constant(F(1), 2) == a
    assert exp_series(1, 8) * exp_series(-1, 8) == TruncSeries.constant(F(1), 8)


def test_egf_product_is_binomial_convolution():
    e = TruncSeries([F(1)] * 9, egf=True)  # e^x in EGF form
    assert (e * e).coeffs == tuple(F(2) ** n for n in range(9))


def test_division_examples():
    x = TruncSeries.monomial(F(1), 1, 4)
    assert series_div(x, x) == TruncSeries.constant(F(1), 3)
    u = one_minus_exp_neg(6)
    assert series_div(u, u) == TruncSeries.constant(F(1), 5)
    x2 = TruncSeries.monomial(F(1), 2, 4)
    q = series_div(x2, one_minus_exp_neg(4))
    assert q.order == 3
    assert q.coeffs == (0, 1, F(1, 2), F(1, 12))


def test_division_precision_drops_by_valuation():
    b = TruncSeries([F(0), F(0), F(2), F(1), F(5)])
    a = TruncSeries([F(0), F(0), F(1), F(0), F(3)])
    q = series_div(a, b)
    assert q.order == 2
    back = series_mul(TruncSeries(list(q.coeffs) + [F(0), F(0)]), b)
    assert back.coeffs[:5] == a.coeffs[:5]


def test_division_errors():
    with pytest.raises(ValueError):
        series_div(TruncSeries([0, 1, 0]), TruncSeries([0, 0, 1]))
    with pytest.raises(ValueError):
        series_div(TruncSeries([1, 1]), TruncSeries([0, 1]))
    with pytest.raises(ValueError):
        TruncSeries([1, 2]) * TruncSeries([1, 2, 3])
    with pytest.raises(ValueError):
        TruncSeries([1, 2]) * TruncSeries([1, 2], egf=True)


def test_composition_examples():
    u = one_minus_exp_neg(5)
    assert series_compose(TruncSeries.monomial(F(1), 1, 5), u) == u
    sq = series_compose(TruncSeries([0, 0, 1, 0]), TruncSeries([0, 1, 1, 0]))
    assert sq.coeffs == (0, 0, 1, 2)
    neg_log = TruncSeries([F(0)] + [F(1, k) for k in range(1, 6)])
    assert series_compose(neg_log, u) == TruncSeries.monomial(F(1), 1, 5)
    with pytest.raises(ValueError):
        series_compose(neg_log, exp_series(1, 5))


def test_egf_composition_matches_ogf():
    u = one_minus_exp_neg(6)
    outer = TruncSeries([F(0)] + [F(1, k * k) for k in range(1, 7)])
    ogf = series_compose(outer, u)
    egf = series_compose(outer.to_egf(), u.to_egf())
    assert egf.to_ogf() == ogf


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def series_of(n):
    return st.lists(coeff, min_size=n + 1, max_size=n + 1).map(TruncSeries)


@given(series_of(6), series_of(6), series_of(6))
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(series_of(6), series_of(6), st.integers(min_value=0, max_value=3))
def test_division_round_trip(qs, bs, v):
    b = TruncSeries([F(0)] * v + list(bs.coeffs[: 7 - v]))
    if b.valuation() != v:
        return
    prod = series_mul(qs, b)
    back = series_div(prod, b)
    assert back == qs.truncate(6 - v)


@given(st.lists(coeff, min_size=4, max_size=4), st.lists(coeff, min_size=4, max_size=4))
def test_multivariate_inverse(head, tail):
    if head[0] == 0:
        return
    orders = (2, 2)
    terms = {(0, 0): head[0], (1, 0): head[1], (0, 1): head[2], (1, 1): head[3], (2, 1): tail[0], (0, 2): tail[1]}
    a = MultiTruncSeries(terms, orders)
    assert a * a.inverse() == MultiTruncSeries.constant(F(1), orders)
    b = MultiTruncSeries({(0, 0): tail[2] or F(1), (2, 2): tail[3]}, orders)
    assert (b / a) * a == b


def test_exp_linear_product():
    orders = (3, 3)
    a = MultiTruncSeries.exp_linear([F(1), F(0)], orders)
    b = MultiTruncSeries.exp_linear([F(0), F(-2)], orders)
    assert a * b == MultiTruncSeries.exp_linear([F(1), F(-2)], orders)
    assert a[(3, 0)] == F(1, 6)
