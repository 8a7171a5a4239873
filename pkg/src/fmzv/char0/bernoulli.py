"""Alternating multiple poly-Bernoulli numbers B_n^{s;eps} and C_n^{s;eps}.

Two independent routes are provided: the defining generating series
(``ampbn_series``) and the finite Stirling-number sums (``ampbn_closed``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Literal, Sequence

from ..series import MultiTruncSeries, TruncSeries, series_div
from .stirling import stirling_table


def _check_index(s: Sequence[int], eps: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    s, eps = tuple(int(x) for x in s), tuple(int(e) for e in eps)
    if len(s) != len(eps):
        raise ValueError(f"index {s} and signs {eps} have different lengths")
    if any(e not in (1, -1) for e in eps):
        raise ValueError(f"signs must be +1 or -1, got {eps}")
    return s, eps


@lru_cache(maxsize=4096)
def _li_weights(s: tuple[int, ...], eps: tuple[int, ...], m_max: int) -> tuple[Fraction, ...]:
    """w[m] = eps_1^m m^{-s_1} * sum_{m > m_2 > ... > m_r > 0} prod_{i>=2} eps_i^{m_i} m_i^{-s_i}.

    Index 0 is a placeholder (always 0).
    """
    r = len(s)
    cur = [Fraction(0)] + [Fraction(eps[-1] ** m) * Fraction(m) ** (-s[-1]) for m in range(1, m_max + 1)]
    for i in range(r - 2, -1, -1):
        nxt = [Fraction(0)] * (m_max + 1)
        running = Fraction(0)
        for m in range(1, m_max + 1):
            nxt[m] = Fraction(eps[i] ** m) * Fraction(m) ** (-s[i]) * running
            running += cur[m]
        cur = nxt
    return tuple(cur)


@lru_cache(maxsize=None)
def _one_minus_exp_neg_powers(order: int) -> tuple[TruncSeries, ...]:
    """(1 - e^{-x})^m for m = 0..order as EGF series truncated at ``order``."""
    base = TruncSeries([Fraction(0)] + [Fraction((-1) ** (n + 1)) for n in range(1, order + 1)], egf=True)
    powers = [TruncSeries.constant(Fraction(1), order, egf=True)]
    for _ in range(order):
        powers.append(powers[-1] * base)
    return tuple(powers)


def _exp_neg(order: int) -> TruncSeries:
    return TruncSeries([Fraction((-1) ** n) for n in range(order + 1)], egf=True)


def ampbn_series(s: Sequence[int], eps: Sequence[int], N: int) -> tuple[list[Fraction], list[Fraction]]:
    """(B_0..B_N, C_0..C_N) read off the defining exponential generating series.

    The numerator Li_s((1-e^{-x}) eps_1, eps_2, ..., eps_r) only needs
    m_1 <= N + 1, since (1-e^{-x})^{m_1} / (1-e^{-x}) has valuation m_1 - 1.

    >>> ampbn_series((1,), (1,), 2)
    ([Fraction(1, 1), Fraction(1, 2), Fraction(1, 6)], [Fraction(1, 1), Fraction(-1, 2), Fraction(1, 6)])
    """
    s, eps = _check_index(s, eps)
    if not s:
        raise ValueError("depth 0: Li = 1 and 1/(1 - e^{-x}) is not a power series")
    if N < 0:
        raise ValueError("N must be non-negative")
    M = N + 1
    w = _li_weights(s, eps, M)
    powers = _one_minus_exp_neg_powers(M)
    numerator = TruncSeries.constant(Fraction(0), M, egf=True)
    for m in range(1, M + 1):
        if w[m]:
            numerator = numerator + powers[m] * w[m]
    B = series_div(numerator, powers[1])
    C = B * _exp_neg(N)
    return list(B.coeffs), list(C.coeffs)


def ampbn_closed(s: Sequence[int], eps: Sequence[int], n: int, variant: Literal["B", "C"] = "C") -> Fraction:
    """B_n or C_n as a finite sum weighted by Stirling numbers of the second kind.

    The alternating C formula is a theorem for n >= 1; n = 0 is evaluated by the
    same sum.  The B formula is only available for all-(+1) signs.
    """
    s, eps = _check_index(s, eps)
    if not s:
        raise ValueError("the closed form needs depth r >= 1")
    if n < 0:
        raise ValueError("n must be non-negative")
    if variant == "B" and any(e != 1 for e in eps):
        raise ValueError("no closed form for B with nontrivial signs")
    if variant not in ("B", "C"):
        raise ValueError(f"variant must be 'B' or 'C', got {variant!r}")
    table = stirling_table(max(64, n + 1))
    w = _li_weights(s, eps, n + 1)
    total = Fraction(0)
    for m1 in range(1, n + 2):
        if not w[m1]:
            continue
        st = table.second(n + 1, m1) if variant == "C" else table.second(n, m1 - 1)
        if st:
            total += (-1) ** (m1 - 1) * factorial(m1 - 1) * st * w[m1]
    return (-1) ** n * total


@dataclass
class GenfunReport:
    """Outcome of comparing both sides of the generating-function duality."""

    r: int
    eps: tuple[int, ...]
    orders: tuple[int, ...]
    lower: int
    ok_B: bool
    ok_C: bool
    mismatch_B: tuple[int, ...] | None = None
    mismatch_C: tuple[int, ...] | None = None
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.ok_B and self.ok_C

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "eps": list(self.eps),
            "orders": list(self.orders),
            "lower": self.lower,
            "ok_B": self.ok_B,
            "ok_C": self.ok_C,
            "mismatch_B": list(self.mismatch_B) if self.mismatch_B else None,
            "mismatch_C": list(self.mismatch_C) if self.mismatch_C else None,
            **self.detail,
        }


def genfun_lhs(r: int, eps: Sequence[int], x_order: int, y_orders: Sequence[int], lower: int = 0):
    """sum_{s_i >= lower} sum_n B_n^{(-s);eps} x^n/n! prod y_i^{s_i}/s_i!, and the C analogue."""
    orders = (x_order, *y_orders)
    B_terms, C_terms = {}, {}
    for svec in product(*(range(lower, b + 1) for b in y_orders)):
        B, C = ampbn_series(tuple(-x for x in svec), eps, x_order)
        scale = 1
        for x in svec:
            scale *= factorial(x)
        for n in range(x_order + 1):
            den = factorial(n) * scale
            B_terms[(n, *svec)] = B[n] / den
            C_terms[(n, *svec)] = C[n] / den
    return MultiTruncSeries(B_terms, orders), MultiTruncSeries(C_terms, orders)


def genfun_rhs(r: int, eps: Sequence[int], x_order: int, y_orders: Sequence[int]):
    """The rational expression in e^{-x} and e^{-y_1-...-y_i}, expanded."""
    orders = (x_order, *y_orders)
    nv = len(orders)
    ex = MultiTruncSeries.exp_linear([Fraction(-1)] + [0] * (nv - 1), orders)
    numerator = (1 - ex) ** (r - 1)
    denominator = MultiTruncSeries.constant(Fraction(1), orders)
    sign = 1
    for i in range(1, r + 1):
        sign *= eps[i - 1]
        ey = MultiTruncSeries.exp_linear([0] + [Fraction(-1)] * i + [0] * (nv - 1 - i), orders)
        denominator = denominator * (ey * sign + ex - 1)
    quotient = numerator / denominator
    return quotient, ex * quotient


def genfun_dual_check(
    r: int,
    eps: Sequence[int],
    x_order: int,
    y_orders: Sequence[int],
    lower: int = 0,
) -> GenfunReport:
    """Expand both sides of the duality and report the first mismatching monomial.

    ``lower`` is the lower summation bound for every s_i (0 or 1).
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    eps = tuple(eps)
    _check_index((0,) * r, eps)
    if len(y_orders) != r:
        raise ValueError(f"need {r} y-orders, got {len(y_orders)}")
    lhs_B, lhs_C = genfun_lhs(r, eps, x_order, y_orders, lower)
    rhs_B, rhs_C = genfun_rhs(r, eps, x_order, y_orders)
    mB = lhs_B.first_mismatch(rhs_B)
    mC = lhs_C.first_mismatch(rhs_C)
    return GenfunReport(
        r=r, eps=eps, orders=(x_order, *y_orders), lower=lower,
        ok_B=mB is None, ok_C=mC is None, mismatch_B=mB, mismatch_C=mC,
    )
