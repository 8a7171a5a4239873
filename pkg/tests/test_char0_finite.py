from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, strategies as st

from fmzv.char0 import ampbn_closed, finite_mpl_component, fmzv_component, verify_0result
from fmzv.residue import ResidueInt, primes_between


def nested_oracle(s, bases, l):
    # the defining sum with exact rationals, reduced at the end
    total = Fraction(0)
    for ns in combinations(range(l - 1, 0, -1), len(s)):
        term = Fraction(1)
        for n, si, a in zip(ns, s, bases):
            term *= Fraction(a) ** n / Fraction(n) ** si
        total += term
    return total.numerator * pow(total.denominator, -1, l) % l


def test_examples():
    assert fmzv_component((), (), 7).value == 1
    assert fmzv_component((1,), (1,), 5).value == 0
    assert fmzv_component((1,), (-1,), 3).value == (-1 + pow(2, -1, 3)) % 3
    assert fmzv_component((1, 1, 1), (1, 1, 1), 3).value == 0


def test_mpl_examples():
    l = 11
    for s in [(1,), (2, 1), (1, 3, 2)]:
        ones = (1,) * len(s)
        assert finite_mpl_component(s, ones, l) == fmzv_component(s, ones, l).value
    assert finite_mpl_component((2, 1), (0, 3), l) == 0
    assert finite_mpl_component((2, 1), (ResidueInt(10, l), 1), l) == fmzv_component((2, 1), (-1, 1), l).value


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        fmzv_component((1,), (1,), 9)


@given(st.lists(st.integers(-1, 3), min_size=1, max_size=3), st.sampled_from(primes_between(3, 31)), st.data())
def test_against_rational_oracle(s, l, data):
    eps = tuple(data.draw(st.sampled_from((1, -1))) for _ in s)
    assert fmzv_component(s, eps, l).value == nested_oracle(s, eps, l)
    a = tuple(data.draw(st.integers(0, l - 1)) for _ in s)
    assert finite_mpl_component(s, a, l).value == nested_oracle(s, a, l)


def test_signed_mpl_equals_alternating_zeta():
    for l in primes_between(3, 31):
        for r in (1, 2, 3):
            for s in product(range(-1, 4), repeat=r):
                for eps in product((1, -1), repeat=r):
                    assert finite_mpl_component(s, eps, l) == fmzv_component(s, eps, l).value


def test_theorem_examples():
    assert verify_0result((2,), (1,), 0, 5).holds
    assert verify_0result((2,), (-1,), 1, 7).holds
    rep = verify_0result((1,), (1,), 0, 5)
    assert rep.holds and rep.lhs == 0 == rep.rhs


def test_right_side_is_minus_c_value():
    rep = verify_0result((3, 1), (-1, 1), 1, 13)
    c = ampbn_closed((2, 1), (-1, 1), 13 - 1 - 2)
    assert rep.rational == c
    assert rep.rhs == (-c.numerator * pow(c.denominator, -1, 13)) % 13


def test_depth_exceeding_prime_vanishes():
    assert fmzv_component((1, 1, 1, 1), (1, 1, 1, 1), 3).value == 0
    assert fmzv_component((1, 1, 1, 1, 1), (1, -1, 1, 1, 1), 5).value == 0
    assert fmzv_component((1, 1, 1, 1), (1, 1, 1, 1), 5).value == pow(24, -1, 5)


def test_nonpositive_leading_entry_on_small_grid():
    for l in (5, 7, 11):
        for s in product(range(-1, 2), range(1, 3)):
            for eps in product((1, -1), repeat=2):
                rep = verify_0result(s, eps, 0, l)
                assert rep.exceptional or rep.holds
