"""Truncated formal power series over an arbitrary commutative coefficient ring.

Coefficients only need ``+``, ``-``, ``*`` (including by Python ints) and, for
division, ``1 / c`` on the leading coefficient.  Exponential generating
function (EGF) mode stores ``c_n`` meaning ``c_n x^n / n!``; division and
composition in EGF mode need a coefficient ring containing the rationals.
"""
from __future__ import annotations

from itertools import product
from math import comb, factorial
from typing import Iterable, Sequence

DEFAULT_ORDER = 16
DEFAULT_MULTI_ORDER = 6


def _is_zero(c) -> bool:
    return c == 0


class TruncSeries:
    """Power series c_0 + c_1 x + ... + c_N x^N + O(x^(N+1))."""

    __slots__ = ("coeffs", "egf")

    def __init__(self, coeffs: Iterable, egf: bool = False):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        self.coeffs = coeffs
        self.egf = egf

    # construction -------------------------------------------------------
    @classmethod
    def constant(cls, c, order: int, egf: bool = False) -> "TruncSeries":
        zero = c * 0
        return cls((c,) + (zero,) * order, egf)

    @classmethod
    def monomial(cls, c, k: int, order: int, egf: bool = False) -> "TruncSeries":
        """c x^k (in EGF mode the stored coefficient is c k!)."""
        zero = c * 0
        coeffs = [zero] * (order + 1)
        if k <= order:
            coeffs[k] = c * factorial(k) if egf else c
        return cls(coeffs, egf)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def zero(self):
        return self.coeffs[0] * 0

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient; order + 1 for the zero series."""
        for n, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return n
        return len(self.coeffs)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} to {order}")
        return TruncSeries(self.coeffs[: order + 1], self.egf)

    def map(self, f) -> "TruncSeries":
        return TruncSeries((f(c) for c in self.coeffs), self.egf)

    # EGF <-> OGF -------------------------------------------------------
    def to_ogf(self) -> "TruncSeries":
        if not self.egf:
            return self
        return TruncSeries((c / factorial(n) for n, c in enumerate(self.coeffs)), False)

    def to_egf(self) -> "TruncSeries":
        if self.egf:
            return self
        return TruncSeries((c * factorial(n) for n, c in enumerate(self.coeffs)), True)

    # arithmetic --------------------------------------------------------
    def _check(self, other: "TruncSeries"):
        if not isinstance(other, TruncSeries):
            raise TypeError(f"expected TruncSeries, got {type(other).__name__}")
        if self.order != other.order:
            raise ValueError(f"truncation order mismatch: {self.order} vs {other.order}")
        if self.egf != other.egf:
            raise ValueError("cannot mix EGF and OGF series")
        if type(self.coeffs[0]) is not type(other.coeffs[0]):
            raise TypeError(
                f"coefficient ring mismatch: {type(self.coeffs[0]).__name__} "
                f"vs {type(other.coeffs[0]).__name__}"
            )

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries((self.coeffs[0] + other,) + self.coeffs[1:], self.egf)
        self._check(other)
        return TruncSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), self.egf)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries((-c for c in self.coeffs), self.egf)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return TruncSeries((c * other for c in self.coeffs), self.egf)

    def __rmul__(self, other):
        return TruncSeries((other * c for c in self.coeffs), self.egf)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return series_div(self, other)
        return TruncSeries((c / other for c in self.coeffs), self.egf)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers: use series_div")
        result = TruncSeries.constant(self.coeffs[0] * 0 + 1, self.order, self.egf)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self.egf == other.egf
            and self.order == other.order
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    __hash__ = None

    def __repr__(self):
        kind = "egf" if self.egf else "ogf"
        return f"TruncSeries({list(self.coeffs)!r}, {kind})"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated at the common order (binomial convolution for EGFs)."""
    a._check(b)
    N = a.order
    ac, bc = a.coeffs, b.coeffs
    zero = a.zero
    out = [zero] * (N + 1)
    a_nz = [(i, c) for i, c in enumerate(ac) if not _is_zero(c)]
    b_nz = [(j, c) for j, c in enumerate(bc) if not _is_zero(c)]
    for i, x in a_nz:
        for j, y in b_nz:
            n = i + j
            if n > N:
                break
            term = x * y
            if a.egf:
                term = term * comb(n, i)
            out[n] = out[n] + term
    return TruncSeries(out, a.egf)


def _ogf_unit_inverse(b: Sequence) -> list:
    try:
        inv0 = 1 / b[0]
    except ZeroDivisionError as exc:
        raise ValueError(f"leading coefficient {b[0]!r} is not invertible") from exc
    q = [inv0]
    nz = [(k, c) for k, c in enumerate(b) if k and not _is_zero(c)]
    for n in range(1, len(b)):
        acc = b[0] * 0
        for k, c in nz:
            if k > n:
                break
            acc = acc + c * q[n - k]
        q.append(-(inv0 * acc))
    return q


def series_div(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Quotient a / b with x^v factored out of both, v = valuation(b).

    The result is exact to order N - v, which becomes its truncation order.
    """
    a._check(b)
    v = b.valuation()
    if v > b.order:
        raise ZeroDivisionError("division by the zero series")
    if a.valuation() < v:
        raise ValueError(f"valuation(a)={a.valuation()} < valuation(b)={v}: quotient is not a power series")
    egf = a.egf
    ao, bo = a.to_ogf().coeffs, b.to_ogf().coeffs
    num, den = ao[v:], bo[v:]
    inv = _ogf_unit_inverse(den)
    M = len(num) - 1
    zero = a.zero
    out = []
    for n in range(M + 1):
        acc = zero
        for k in range(n + 1):
            if not _is_zero(num[k]):
                acc = acc + num[k] * inv[n - k]
        out.append(acc)
    q = TruncSeries(out, False)
    return q.to_egf() if egf else q


def series_compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """outer(inner(x)) truncated at the common order; inner must have no constant term."""
    outer._check(inner)
    if inner.valuation() < 1:
        raise ValueError("inner series has a nonzero constant term")
    egf = outer.egf
    o, i = outer.to_ogf(), inner.to_ogf()
    N = o.order
    result = TruncSeries.constant(o.coeffs[N], N)
    for k in range(N - 1, -1, -1):
        result = series_mul(result, i) + o.coeffs[k]
    return result.to_egf() if egf else result


class MultiTruncSeries:
    """Multivariate truncated series stored sparsely as {exponent tuple: coefficient}.

    Every variable has its own truncation order; monomials outside the box are
    dropped.  Coefficients are ordinary (not exponential) monomial coefficients.
    """

    __slots__ = ("terms", "orders")

    def __init__(self, terms: dict, orders: Sequence[int]):
        self.orders = tuple(orders)
        self.terms = {
            e: c for e, c in terms.items()
            if not _is_zero(c) and all(x <= b for x, b in zip(e, self.orders))
        }
        for e in self.terms:
            if len(e) != len(self.orders):
                raise ValueError(f"exponent {e} does not match {len(self.orders)} variables")

    @classmethod
    def constant(cls, c, orders: Sequence[int]) -> "MultiTruncSeries":
        return cls({(0,) * len(orders): c}, orders)

    @classmethod
    def exp_linear(cls, weights: Sequence, orders: Sequence[int]) -> "MultiTruncSeries":
        """exp(w_0 x_0 + w_1 x_1 + ...)."""
        terms = {}
        for e in product(*(range(b + 1) for b in orders)):
            c = 1
            for w, k in zip(weights, e):
                if k:
                    c = c * w ** k / factorial(k)
            terms[e] = c
        return cls(terms, orders)

    def _check(self, other: "MultiTruncSeries"):
        if self.orders != other.orders:
            raise ValueError(f"truncation orders differ: {self.orders} vs {other.orders}")

    def __getitem__(self, e):
        return self.terms.get(tuple(e), 0)

    def __add__(self, other):
        if not isinstance(other, MultiTruncSeries):
            other = MultiTruncSeries.constant(other, self.orders)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiTruncSeries(terms, self.orders)

    __radd__ = __add__

    def __neg__(self):
        return MultiTruncSeries({e: -c for e, c in self.terms.items()}, self.orders)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiTruncSeries):
            return MultiTruncSeries({e: c * other for e, c in self.terms.items()}, self.orders)
        self._check(other)
        bounds = self.orders
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                if any(x > b for x, b in zip(e, bounds)):
                    continue
                out[e] = out.get(e, 0) + c1 * c2
        return MultiTruncSeries(out, bounds)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = MultiTruncSeries.constant(1, self.orders)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> "MultiTruncSeries":
        """Multiplicative inverse of a series with invertible constant term."""
        zero_e = (0,) * len(self.orders)
        c0 = self.terms.get(zero_e, 0)
        if _is_zero(c0):
            raise ValueError("constant term is zero; series is not a unit")
        inv0 = 1 / c0
        # graded recursion in total degree
        monos = sorted(product(*(range(b + 1) for b in self.orders)), key=lambda e: (sum(e), e))
        rest = [(e, c) for e, c in self.terms.items() if e != zero_e]
        q: dict = {zero_e: inv0}
        for e in monos[1:]:
            acc = 0
            for f, c in rest:
                g = tuple(x - y for x, y in zip(e, f))
                if min(g) < 0:
                    continue
                qg = q.get(g)
                if qg is not None:
                    acc = acc + c * qg
            q[e] = -inv0 * acc
        return MultiTruncSeries(q, self.orders)

    def __truediv__(self, other):
        if isinstance(other, MultiTruncSeries):
            return self * other.inverse()
        return MultiTruncSeries({e: c / other for e, c in self.terms.items()}, self.orders)

    def first_mismatch(self, other: "MultiTruncSeries"):
        """The least exponent tuple (graded order) where the two differ, or None."""
        self._check(other)
        for e in sorted(set(self.terms) | set(other.terms), key=lambda e: (sum(e), e)):
            if self[e] != other[e]:
                return e
        return None

    def __eq__(self, other):
        if not isinstance(other, MultiTruncSeries):
            return NotImplemented
        return self.orders == other.orders and self.first_mismatch(other) is None

    __hash__ = None

    def __repr__(self):
        return f"MultiTruncSeries({len(self.terms)} terms, orders={self.orders})"
