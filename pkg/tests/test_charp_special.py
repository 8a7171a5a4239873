from itertools import product

import pytest
from hypothesis import given, strategies as st

from fmzv.charp import (
    Poly,
    RatFunc,
    ampbcn_closed,
    ampbcn_series,
    anderson_thakur,
    at_identity_check,
    at_poly,
    carlitz_constants,
    carlitz_exp,
    ctx_for_q,
    gamma_root,
    recursion_check,
    selectors,
    stirling_carlitz,
)
from fmzv.series import TruncSeries


@pytest.mark.parametrize("q", [2, 3])
def test_at_polynomials_small(q):
    ctx = ctx_for_q(q)
    H = anderson_thakur(q * q, ctx)
    assert len(H) == q * q + 1
    for n in range(q):
        assert H[n].degree == 0 and H[n].u(0) == 1
    assert all(all(isinstance(u, Poly) for u in h.coeffs) for h in H)


def test_at_known_values():
    F2 = ctx_for_q(2).Fq
    H2 = at_poly(3, ctx_for_q(2))  # H_2 for q = 2
    assert [u.coeffs for u in H2.coeffs] == [(0, 0, 1), (1,)]  # t + theta^2
    F3 = ctx_for_q(3).Fq
    H3 = at_poly(4, ctx_for_q(3))  # H_3 for q = 3: 2t^3 - theta^3 - t
    assert H3.u(3) == 2 and H3.u(2).is_zero() and H3.u(1) == 2
    assert H3.u(0) == Poly(F3, (0, 0, 0, 2))
    assert F2 is ctx_for_q(2).Fq


@pytest.mark.parametrize("q", [2, 3])
def test_at_identity(q):
    ctx = ctx_for_q(q)
    for n in range(1, q * q + 1):
        for d in range(3):
            rep = at_identity_check(n, d, ctx)
            assert rep.ok, rep.to_dict()
    assert at_identity_check(1, 0, ctx).lhs == 1


@pytest.mark.parametrize("q", [2, 3])
def test_carlitz_exp_functional_equation(q):
    # e_C(theta z) = theta e_C(z) + e_C(z)^q
    ctx = ctx_for_q(q)
    N = q ** 3
    e = carlitz_exp(ctx, N)
    F = ctx.Fq
    theta = RatFunc(Poly.theta(F))
    scaled = TruncSeries([c * theta ** n for n, c in enumerate(e.coeffs)])
    assert scaled == e * theta + e ** q
    assert e.valuation() == 1
    support = {q ** i for i in range(4)}
    assert all(c.is_zero() for n, c in enumerate(e.coeffs) if n not in support)


@pytest.mark.parametrize("q", [2, 3])
def test_stirling_carlitz_identities(q):
    ctx = ctx_for_q(q)
    bound = q * q
    T = stirling_carlitz(bound, bound, ctx)
    assert T(1, 1) == 1
    for n, m in product(range(bound + 1), repeat=2):
        if n < m:
            assert T(n, m).is_zero()
        if n == m:
            assert T(n, m) == 1
    for a, b in product(range(3), repeat=2):
        if q ** a - 1 <= bound and q ** b - 1 <= bound:
            assert T(q ** a - 1, q ** b - 1) == (1 if a == b else 0)
    assert T(-1, 2) == 0
    with pytest.raises(IndexError):
        T(bound + 1, 0)


def test_stirling_carlitz_first_column_is_e_c():
    ctx = ctx_for_q(3)
    T = stirling_carlitz(9, 1, ctx)
    K = carlitz_constants(ctx)
    e = carlitz_exp(ctx, 9)
    for n in range(10):
        assert T(n, 1) == e[n] * K.Pi(n)


def test_ampbcn_examples():
    for q in (2, 3):
        ctx = ctx_for_q(q)
        assert ampbcn_series((1,), (1,), (0,), q, ctx)[0].value == 1
        for s in product((1, 2), repeat=2):
            vals = ampbcn_series(s, (1, 1), (0, 0), q * q - 1, ctx)
            assert all(v.value.is_zero() for v in vals[: q - 1])


def test_ampbcn_depth_one_at_q_power_minus_one():
    ctx = ctx_for_q(3)
    K = carlitz_constants(ctx)
    Fqp = ctx.Fqp
    for g in Fqp.units():
        for m in (0, 1, 2):
            n = 3 ** m - 1
            for s in (1, 2, 4):
                for j in range(at_poly(s, ctx).degree + 1):
                    u = at_poly(s, ctx).u(j).embed(Fqp).scale(g)
                    expected = RatFunc(K.Gamma(3 ** m).embed(Fqp) * u ** (3 ** m), K.L(m).embed(Fqp) ** s)
                    assert ampbcn_closed((s,), (g,), (j,), n, ctx).value == expected


def test_plain_value_gives_inverse_l():
    for q in (2, 3):
        ctx = ctx_for_q(q)
        K = carlitz_constants(ctx)
        Fqp = ctx.Fqp
        for d in range(3):
            bc = ampbcn_closed((1,), (1,), (0,), q ** d - 1, ctx).value
            assert bc / RatFunc(K.Gamma(q ** d).embed(Fqp)) == RatFunc(Poly(Fqp, (1,)), K.L(d).embed(Fqp))


def test_selector_out_of_range():
    ctx = ctx_for_q(3)
    with pytest.raises(ValueError):
        ampbcn_closed((1,), (1,), (1,), 3, ctx)
    with pytest.raises(ValueError):
        ampbcn_closed((1,), (0,), (0,), 3, ctx)


@pytest.mark.parametrize("q", [2, 3])
def test_series_equals_closed(q):
    ctx = ctx_for_q(q)
    gens = list(ctx.Fqp.units())[:4]
    for r in (1, 2):
        for s in product((1, 2), repeat=r):
            for gamma in product(gens, repeat=r):
                for j in selectors(s, ctx):
                    ser = ampbcn_series(s, gamma, j, q * q - 1, ctx)
                    for n in range(q * q):
                        assert ampbcn_closed(s, gamma, j, n, ctx).value == ser[n].value


def test_series_equals_closed_with_nontrivial_selector():
    ctx = ctx_for_q(3)
    s = (4, 1)
    assert at_poly(4, ctx).degree == 3
    for j in selectors(s, ctx):
        for gamma in [(1, 1), (3, 2)]:
            ser = ampbcn_series(s, gamma, j, 8, ctx)
            for n in range(9):
                assert ampbcn_closed(s, gamma, j, n, ctx).value == ser[n].value


def test_recursion_examples():
    assert recursion_check((1, 1), (1, 1), (0, 0), 1, ctx_for_q(2)).ok
    ctx3 = ctx_for_q(3)
    g = gamma_root(2, ctx3)
    assert ctx3.Fqp.pow(g, 2) == 2
    assert recursion_check((1, 2), (g, 1), (0, 0), 2, ctx3).ok
    assert recursion_check((1, 1, 2), (1, 1, 1), (0, 0, 0), 2, ctx_for_q(2)).ok
    with pytest.raises(ValueError):
        recursion_check((1,), (1,), (0,), 1, ctx3)


@given(st.sampled_from([2, 3]), st.lists(st.integers(1, 2), min_size=2, max_size=2),
       st.integers(1, 2), st.data())
def test_recursion_property(q, s, m, data):
    ctx = ctx_for_q(q)
    gamma = tuple(data.draw(st.integers(1, ctx.qp - 1)) for _ in s)
    j = data.draw(st.sampled_from(selectors(s, ctx)))
    assert recursion_check(s, gamma, j, m, ctx).ok
