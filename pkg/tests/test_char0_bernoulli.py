from fractions import Fraction
from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from fmzv.char0 import ampbn_closed, ampbn_series, genfun_dual_check, stirling, stirling_table
from fmzv.char0.stirling import StirlingTable
from fmzv.series import TruncSeries

F = Fraction


def second_kind_oracle(n, m):
    # inclusion-exclusion count of surjections
    return sum((-1) ** (m - i) * comb(m, i) * i ** n for i in range(m + 1)) // factorial(m)


def test_stirling_examples():
    assert stirling("second", 1, 2) == 0
    assert all(stirling("second", n, 1) == 1 for n in range(1, 20))
    assert stirling("second", 3, 2) == 3
    assert stirling("first", 4, 2) == 11


def test_stirling_tables_against_oracles():
    T = StirlingTable(20)
    T.validate()
    for n in range(21):
        for m in range(n + 1):
            assert T.second(n, m) == second_kind_oracle(n, m)
    # rising factorial x(x+1)...(x+n-1) = sum [n m] x^m
    for n in range(12):
        poly = [1]
        for k in range(n):
            poly = [(poly[i - 1] if i else 0) + k * (poly[i] if i < len(poly) else 0) for i in range(len(poly) + 1)]
        assert [T.first(n, m) for m in range(n + 1)] == poly


def test_stirling_out_of_bound():
    with pytest.raises(IndexError):
        stirling_table(10).second(11, 2)


def test_exp_stirling_series_identity():
    # e^x (e^x - 1)^{m-1} = (m-1)! sum_{n >= m-1} {n+1, m} x^n/n!
    N = 16
    e = TruncSeries([F(1)] * (N + 1), egf=True)
    em1 = e - TruncSeries.constant(F(1), N, egf=True)
    for m in range(1, 9):
        lhs = e * em1 ** (m - 1)
        rhs = [F(factorial(m - 1) * stirling("second", n + 1, m)) for n in range(N + 1)]
        assert list(lhs.coeffs) == rhs


BERNOULLI_PLUS = [F(1), F(1, 2), F(1, 6), F(0), F(-1, 30), F(0), F(1, 42)]


def test_depth_one_index_one_gives_bernoulli_numbers():
    B, C = ampbn_series((1,), (1,), 6)
    assert B == BERNOULLI_PLUS
    assert C == [b * (-1) ** n for n, b in enumerate(BERNOULLI_PLUS)]


def double_stirling_negative(n, k):
    return sum(factorial(j) ** 2 * stirling("second", n + 1, j + 1) * stirling("second", k + 1, j + 1)
               for j in range(min(n, k) + 1))


def test_negative_index_matches_double_stirling_formula():
    for k in range(5):
        B, _ = ampbn_series((-k,), (1,), 8)
        assert B == [double_stirling_negative(n, k) for n in range(9)]
    assert ampbn_series((-3,), (1,), 3)[0][3] == 230


def test_small_examples():
    for s in range(-2, 4):
        for e in (1, -1):
            assert ampbn_series((s,), (e,), 2)[0][0] == e
    for s, eps in product(product(range(-1, 3), repeat=2), product((1, -1), repeat=2)):
        assert ampbn_series(s, eps, 2)[0][0] == 0
    assert ampbn_series((1,), (1,), 0)[1][0] == 1
    assert ampbn_closed((1,), (1,), 0, "C") == 1


def test_c_is_exp_neg_times_b():
    for s, eps in [((2, 1), (1, -1)), ((1, -2, 3), (-1, -1, 1)), ((0,), (-1,))]:
        B, C = ampbn_series(s, eps, 10)
        eneg = TruncSeries([F((-1) ** n) for n in range(11)], egf=True)
        assert list((TruncSeries(B, egf=True) * eneg).coeffs) == C


def test_closed_form_examples():
    _, C = ampbn_series((1,), (1,), 1)
    assert ampbn_closed((1,), (1,), 1) == C[1]
    _, C = ampbn_series((2, 1), (1, -1), 3)
    assert ampbn_closed((2, 1), (1, -1), 3) == C[3]


def test_closed_b_requires_trivial_signs():
    with pytest.raises(ValueError):
        ampbn_closed((1,), (-1,), 2, "B")


def test_bad_signs_rejected():
    with pytest.raises(ValueError):
        ampbn_series((1,), (2,), 3)
    with pytest.raises(ValueError):
        ampbn_series((1, 2), (1,), 3)


def test_empty_index_is_not_a_power_series():
    with pytest.raises(ValueError):
        ampbn_series((), (), 3)


@given(st.lists(st.integers(-2, 3), min_size=1, max_size=3), st.data())
def test_closed_equals_series(s, data):
    eps = tuple(data.draw(st.sampled_from((1, -1))) for _ in s)
    B, C = ampbn_series(s, eps, 9)
    for n in range(10):
        assert ampbn_closed(s, eps, n, "C") == C[n]
        if all(e == 1 for e in eps):
            assert ampbn_closed(s, eps, n, "B") == B[n]


def test_genfun_examples():
    assert genfun_dual_check(1, (1,), 6, (4,)).ok
    assert genfun_dual_check(2, (1, -1), 5, (3, 3)).ok
    assert genfun_dual_check(1, (-1,), 6, (4,)).ok


def test_genfun_positive_lower_bound_misses_the_constant_monomial():
    rep = genfun_dual_check(1, (1,), 4, (3,), lower=1)
    assert not rep.ok
    assert rep.mismatch_B == (0, 0)
