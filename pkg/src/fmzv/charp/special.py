"""Anderson-Thakur polynomials, the Carlitz exponential, Stirling-Carlitz
numbers and alternating multiple poly-Bernoulli-Carlitz numbers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from ..series import TruncSeries, series_div
from .carlitz import carlitz_constants, power_sum_exact
from .fields import GF, FieldCtx
from .poly import Poly, RatFunc


# --- bivariate helpers: {y-degree: Poly in t} ---------------------------

def _bv_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            prod = x * y
            if i + j in out:
                prod = out[i + j] + prod
            out[i + j] = prod
    return {k: v for k, v in out.items() if not v.is_zero()}


def _bv_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out[k] + v if k in out else v
    return {k: v for k, v in out.items() if not v.is_zero()}


def _bv_scale(a: dict, p: Poly) -> dict:
    return {k: v * p for k, v in a.items() if not (v * p).is_zero()}


def _G(i: int, q: int, F: GF) -> dict:
    """G_i(t, y) = prod_{k=1}^{i} (t^{q^i} - y^{q^k}); G_0 = 1."""
    out = {0: Poly(F, (1,))}
    for k in range(1, i + 1):
        factor = {0: Poly.monomial(F, q ** i), q ** k: Poly(F, (F.neg[1],))}
        out = _bv_mul(out, factor)
    return out


@dataclass(frozen=True)
class ATPoly:
    """H_{s-1}(t) = sum_j u_{s,j} t^j with u_{s,j} in A = F_q[theta]."""

    s: int
    coeffs: tuple[Poly, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def u(self, j: int) -> Poly:
        return self.coeffs[j]

    def twisted_at_theta(self, d: int, q: int) -> Poly:
        """H^{(d)}(theta) = sum_j u_{s,j}^{q^d} theta^j."""
        F = self.coeffs[0].field
        total = Poly(F)
        for j, u in enumerate(self.coeffs):
            total = total + u.frobenius(q ** d) * Poly.monomial(F, j)
        return total

    def to_dict(self) -> dict:
        return {"s": self.s, "degree": self.degree, "u": [list(u.coeffs) for u in self.coeffs]}


class DenominatorNotCleared(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def _at_table(ctx: FieldCtx, n_max: int) -> tuple[ATPoly, ...]:
    F, q = ctx.Fq, ctx.q
    K = carlitz_constants(ctx)
    one = Poly(F, (1,))
    # c_n = N_n(t, y) / den_n(t), the x^n coefficient of 1 / (1 - sum_i G_i x^{q^i} / D_i(t))
    nums: list[dict] = [{0: one}]
    dens: list[Poly] = [one]
    parts = []
    i = 0
    while q ** i <= n_max:
        parts.append((q ** i, _G(i, q, F), K.D(i)))
        i += 1
    out = [ATPoly(1, (one,))]
    for n in range(1, n_max + 1):
        terms = []
        for step, G, D in parts:
            if step > n:
                break
            terms.append((_bv_mul(G, nums[n - step]), D * dens[n - step]))
        lcm = one
        for _, den in terms:
            lcm = lcm * den.exact_div(lcm.gcd(den))
        num: dict = {}
        for tnum, den in terms:
            num = _bv_add(num, _bv_scale(tnum, lcm.exact_div(den)))
        nums.append(num)
        dens.append(lcm)
        # frak-H_n = Gamma_{n+1}(t) * c_n must be a polynomial in t and y
        gamma = K.Gamma(n + 1)
        hn: dict = {}
        for ydeg, coeff in num.items():
            qt, rem = (coeff * gamma).divmod(lcm)
            if not rem.is_zero():
                raise DenominatorNotCleared(f"Gamma_{n + 1} does not clear the x^{n} coefficient")
            if not qt.is_zero():
                hn[ydeg] = qt
        # y := theta, collecting by powers of t
        tdeg = max((c.degree for c in hn.values()), default=0)
        u = []
        for a in range(tdeg + 1):
            u.append(Poly(F, [hn[b].coeffs[a] if b in hn and a < len(hn[b].coeffs) else 0
                              for b in range(max(hn, default=0) + 1)]))
        while len(u) > 1 and u[-1].is_zero():
            u.pop()
        out.append(ATPoly(n + 1, tuple(u)))
    return tuple(out)


def anderson_thakur(n_max: int, ctx: FieldCtx) -> list[ATPoly]:
    """H_0, ..., H_{n_max} from the defining geometric series, with a polynomiality check."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    return list(_at_table(ctx, n_max))


def at_poly(s: int, ctx: FieldCtx) -> ATPoly:
    """H_{s-1}, the Anderson-Thakur polynomial attached to index s >= 1."""
    if s < 1:
        raise ValueError("index must be >= 1")
    return _at_table(ctx, s - 1)[s - 1]


@dataclass
class ATIdentityReport:
    n: int
    d: int
    lhs: RatFunc
    rhs: RatFunc

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"n": self.n, "d": self.d, "lhs": self.lhs.to_dict(), "rhs": self.rhs.to_dict(), "ok": self.ok}


def at_identity_check(n: int, d: int, ctx: FieldCtx) -> ATIdentityReport:
    """Compare H_{n-1}^{(d)}(theta) with L_d^n Gamma_n S_d(n)."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    K = carlitz_constants(ctx)
    lhs = RatFunc(at_poly(n, ctx).twisted_at_theta(d, ctx.q))
    rhs = power_sum_exact(d, n, ctx) * (K.L(d) ** n * K.Gamma(n))
    return ATIdentityReport(n, d, lhs, rhs)


# --- Carlitz exponential and Stirling-Carlitz numbers --------------------

@lru_cache(maxsize=None)
def carlitz_exp(ctx: FieldCtx, order: int, field: GF | None = None) -> TruncSeries:
    """e_C(z) = sum_i z^{q^i} / D_i as an ordinary series over k (or k')."""
    field = field or ctx.Fq
    K = carlitz_constants(ctx)
    zero = RatFunc(Poly(field))
    coeffs = [zero] * (order + 1)
    i = 0
    while ctx.q ** i <= order:
        coeffs[ctx.q ** i] = RatFunc(Poly(field, (1,)), K.D(i).embed(field))
        i += 1
    return TruncSeries(coeffs)


class StirlingCarlitzTable:
    """{n m}_C defined by e_C(z)^m / Pi(m) = sum_n {n m}_C z^n / Pi(n)."""

    def __init__(self, ctx: FieldCtx, n_max: int, m_max: int | None = None):
        m_max = n_max if m_max is None else m_max
        self.ctx, self.n_max, self.m_max = ctx, n_max, m_max
        K = carlitz_constants(ctx)
        e = carlitz_exp(ctx, n_max)
        F = ctx.Fq
        power = TruncSeries.constant(RatFunc.from_int(F, 1), n_max)
        self._values: dict[tuple[int, int], RatFunc] = {}
        for m in range(m_max + 1):
            pim = K.Pi(m)
            for n in range(n_max + 1):
                c = power[n]
                self._values[(n, m)] = c * RatFunc(K.Pi(n), pim) if not c.is_zero() else c
            if m < m_max:
                power = power * e

    def __call__(self, n: int, m: int) -> RatFunc:
        if n < 0 or m < 0:
            return RatFunc.from_int(self.ctx.Fq, 0)
        if n > self.n_max or m > self.m_max:
            raise IndexError(f"({n}, {m}) outside the table bounds ({self.n_max}, {self.m_max})")
        return self._values[(n, m)]


@lru_cache(maxsize=None)
def stirling_carlitz(n_max: int, m_max: int, ctx: FieldCtx) -> StirlingCarlitzTable:
    return StirlingCarlitzTable(ctx, n_max, m_max)


# --- alternating multiple poly-Bernoulli-Carlitz numbers -----------------

@dataclass(frozen=True)
class AmpbcnValue:
    s: tuple[int, ...]
    gamma: tuple[int, ...]
    j: tuple[int, ...]
    n: int
    value: RatFunc

    def to_dict(self) -> dict:
        return {"s": list(self.s), "gamma": list(self.gamma), "j": list(self.j), "n": self.n,
                **self.value.to_dict()}


def selectors(s: Sequence[int], ctx: FieldCtx) -> list[tuple[int, ...]]:
    """All j with 0 <= j_i <= deg_t H_{s_i - 1}."""
    return list(product(*(range(at_poly(si, ctx).degree + 1) for si in s)))


def _check_args(s, gamma, j, ctx: FieldCtx):
    s, gamma, j = tuple(s), tuple(gamma), tuple(j)
    if not (len(s) == len(gamma) == len(j)):
        raise ValueError("s, gamma and j must have the same length")
    if any(x < 1 for x in s):
        raise ValueError(f"index entries must be >= 1, got {s}")
    Fqp = ctx.Fqp
    if any(not (0 < g < Fqp.order) for g in gamma):
        raise ValueError(f"gamma entries must be nonzero labels of GF({Fqp.order})")
    for si, ji in zip(s, j):
        if not 0 <= ji <= at_poly(si, ctx).degree:
            raise ValueError(f"selector {j} lies outside J_s for s={s}")
    return s, gamma, j


def _twisted_args(s, gamma, j, ctx: FieldCtx) -> list[Poly]:
    """gamma_i u_{s_i, j_i} as polynomials over F_{q'}."""
    Fqp = ctx.Fqp
    return [at_poly(si, ctx).u(ji).embed(Fqp).scale(g) for si, g, ji in zip(s, gamma, j)]


def _cmpl_term(args: list[Poly], s, ds, ctx: FieldCtx) -> RatFunc:
    """prod_i (gamma_i u_i)^{q^{d_i}} / L_{d_i}^{s_i} over k'."""
    K = carlitz_constants(ctx)
    Fqp = ctx.Fqp
    num, den = Poly(Fqp, (1,)), Poly(Fqp, (1,))
    for a, si, d in zip(args, s, ds):
        num = num * a.frobenius(ctx.q ** d)
        den = den * K.L(d).embed(Fqp) ** si
    return RatFunc(num, den)


def ampbcn_series(s, gamma, j, N: int, ctx: FieldCtx) -> list[AmpbcnValue]:
    """BC_0..BC_N from Li_s(e_C(z) gamma_1 u_1, gamma_2 u_2, ...) / e_C(z)."""
    s, gamma, j = _check_args(s, gamma, j, ctx)
    r = len(s)
    K = carlitz_constants(ctx)
    Fqp = ctx.Fqp
    M = N + 1
    e = carlitz_exp(ctx, M, Fqp)
    args = _twisted_args(s, gamma, j, ctx)
    zero = RatFunc(Poly(Fqp))
    numerator = TruncSeries([zero] * (M + 1))
    d1 = 0
    while ctx.q ** d1 <= M:
        coeff = zero
        # chains d_1 > d_2 > ... > d_r >= 0
        for rest in combinations(range(d1 - 1, -1, -1), r - 1):
            coeff = coeff + _cmpl_term(args, s, (d1, *rest), ctx)
        if not coeff.is_zero():
            numerator = numerator + (e ** (ctx.q ** d1)) * coeff
        d1 += 1
    quotient = series_div(numerator, e)
    return [AmpbcnValue(s, gamma, j, n, quotient[n] * RatFunc(K.Pi(n).embed(Fqp)))
            for n in range(N + 1)]


def _log_floor(n: int, q: int) -> int:
    d = 0
    while q ** (d + 1) <= n:
        d += 1
    return d


def ampbcn_closed(s, gamma, j, n: int, ctx: FieldCtx) -> AmpbcnValue:
    """BC_n as the Stirling-Carlitz finite sum over log_q(n+1) >= d_1 > ... > d_r >= 0."""
    s, gamma, j = _check_args(s, gamma, j, ctx)
    if n < 0:
        raise ValueError("n must be non-negative")
    r = len(s)
    K = carlitz_constants(ctx)
    Fqp = ctx.Fqp
    args = _twisted_args(s, gamma, j, ctx)
    top = _log_floor(n + 1, ctx.q)
    table = stirling_carlitz(n, ctx.q ** top - 1, ctx) if n >= 0 else None
    # inner[d] = sum over d > d_{i+1} > ... > d_r >= 0, built from the right
    inner = [RatFunc.from_int(Fqp, 1)] * (top + 1)
    for i in range(r - 1, 0, -1):
        nxt = []
        running = RatFunc.from_int(Fqp, 0)
        for d in range(top + 1):
            nxt.append(running)
            running = running + _cmpl_term([args[i]], (s[i],), (d,), ctx) * inner[d]
        inner = nxt
    total = RatFunc.from_int(Fqp, 0)
    for d1 in range(r - 1, top + 1):
        sc = table(n, ctx.q ** d1 - 1)
        if sc.is_zero() or inner[d1].is_zero():
            continue
        weight = sc.embed(Fqp) * RatFunc(K.Gamma(ctx.q ** d1).embed(Fqp))
        total = total + weight * _cmpl_term([args[0]], (s[0],), (d1,), ctx) * inner[d1]
    return AmpbcnValue(s, gamma, j, n, total)


@dataclass
class RecursionReport:
    s: tuple[int, ...]
    gamma: tuple[int, ...]
    j: tuple[int, ...]
    m: int
    lhs: RatFunc
    rhs: RatFunc

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"s": list(self.s), "gamma": list(self.gamma), "j": list(self.j), "m": self.m,
                "lhs": self.lhs.to_dict(), "rhs": self.rhs.to_dict(), "ok": self.ok}


def recursion_check(s, gamma, j, m: int, ctx: FieldCtx) -> RecursionReport:
    """BC_{q^m-1}^{s} against BC_{q^m-1}^{s_1} * sum_{d=r-2}^{m-1} BC_{q^d-1}^{s*} / Gamma_{q^d}."""
    s, gamma, j = _check_args(s, gamma, j, ctx)
    r = len(s)
    if r < 2:
        raise ValueError("the recursion needs depth r >= 2")
    if m < 1:
        raise ValueError("m must be >= 1")
    K = carlitz_constants(ctx)
    Fqp = ctx.Fqp
    q = ctx.q
    lhs = ampbcn_closed(s, gamma, j, q ** m - 1, ctx).value
    head = ampbcn_closed(s[:1], gamma[:1], j[:1], q ** m - 1, ctx).value
    tail = RatFunc.from_int(Fqp, 0)
    for d in range(r - 2, m):
        bc = ampbcn_closed(s[1:], gamma[1:], j[1:], q ** d - 1, ctx).value
        tail = tail + bc / RatFunc(K.Gamma(q ** d).embed(Fqp))
    return RecursionReport(s, gamma, j, m, lhs, head * tail)
