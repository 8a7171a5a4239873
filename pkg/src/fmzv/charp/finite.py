"""Per-P components of characteristic-p (alternating) finite multiple zeta
values, finite Carlitz multiple polylogarithms over the extension F_{q'},
and the two theorems linking them to Anderson-Thakur data and to
poly-Bernoulli-Carlitz numbers."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

from .carlitz import QuotCtx, carlitz_constants
from .fields import FieldCtx
from .poly import Poly, RatFunc, enumerate_monic
from .special import ampbcn_closed, at_poly, selectors


def gamma_roots(eps: int, ctx: FieldCtx) -> list[int]:
    """Every gamma in F_{q'}^x with gamma^{q-1} = eps, in label order."""
    if not 0 < eps < ctx.q:
        raise ValueError(f"eps must be a nonzero label of F_{ctx.q}, got {eps}")
    Fqp = ctx.Fqp
    return [g for g in Fqp.units() if Fqp.pow(g, ctx.q - 1) == eps]


def gamma_root(eps: int, ctx: FieldCtx) -> int:
    """The first (q-1)-th root of eps in the canonical enumeration of F_{q'}^x."""
    roots = gamma_roots(eps, ctx)
    if not roots:
        raise AssertionError(f"no (q-1)-th root of {eps} in GF({ctx.qp})")
    return roots[0]


def _check_signs(s: Sequence[int], eps: Sequence[int], ctx: FieldCtx):
    s, eps = tuple(int(x) for x in s), tuple(int(e) for e in eps)
    if len(s) != len(eps):
        raise ValueError(f"index {s} and signs {eps} have different lengths")
    if any(not 0 < e < ctx.q for e in eps):
        raise ValueError(f"signs must be nonzero labels of F_{ctx.q}, got {eps}")
    return s, eps


def fmzv_p_component(s: Sequence[int], eps: Sequence[int], P: QuotCtx) -> Poly:
    """zeta(s; eps)_P as sum_{deg P > d_1 > ... > d_r >= 0} prod eps_i^{d_i} S_{d_i}(s_i) mod P."""
    s = tuple(s)
    eps = tuple(eps)
    if len(s) != len(eps):
        raise ValueError("index and signs differ in length")
    F = P.field
    r = len(s)
    if r == 0:
        return P.one()
    D = P.deg
    if r > D:
        return P.zero()

    def term(i: int, d: int) -> Poly:
        return P.power_sum(d, s[i]).scale(F.pow(eps[i], d))

    cur = [term(r - 1, d) for d in range(D)]
    for i in range(r - 2, -1, -1):
        nxt = []
        running = P.zero()
        for d in range(D):
            nxt.append(P.mul(term(i, d), running) if not running.is_zero() else P.zero())
            running = running + cur[d]
        cur = nxt
    total = P.zero()
    for v in cur:
        total = total + v
    return total


def fmzv_p_brute(s: Sequence[int], eps: Sequence[int], P: QuotCtx) -> Poly:
    """The defining nested sum over monic a_1, ..., a_r with deg P > deg a_1 > ... > deg a_r."""
    F = P.field
    total = P.zero()
    for degs in combinations(range(P.deg - 1, -1, -1), len(s)):
        for tup in product(*(enumerate_monic(P.base_field, d) for d in degs)):
            acc = P.one()
            for a, si, ei, d in zip(tup, s, eps, degs):
                acc = P.mul(acc, P.pow(P.reduce(a), -si)).scale(F.pow(ei, d))
            total = total + acc
    return total


def fcmpl_component(s: Sequence[int], a: Sequence[Poly], P: QuotCtx, ctx: FieldCtx | None = None) -> Poly:
    """sum_{deg P > i_1 > ... > i_r >= 0} prod a_k^{q^{i_k}} / L_{i_k}^{s_k}  in R[theta]/(P)."""
    s = tuple(s)
    if any(x < 1 for x in s):
        raise ValueError("the finite Carlitz polylogarithm needs s_i >= 1")
    if len(a) != len(s):
        raise ValueError("index and arguments differ in length")
    q = P.base_field.order
    K = carlitz_constants(ctx) if ctx is not None else _constants_for(P)
    linv = []
    for i in range(P.deg):
        Li = P.reduce(K.L(i))
        if Li.is_zero():
            raise AssertionError(f"P divides L_{i} with i < deg P")
        linv.append(P.inverse(Li))
    a = [P.reduce(x) for x in a]
    total = P.zero()
    for chain in combinations(range(P.deg - 1, -1, -1), len(s)):
        acc = P.one()
        for ak, sk, ik in zip(a, s, chain):
            acc = P.mul(acc, P.mul(P.pow(ak, q ** ik), P.pow(linv[ik], sk)))
        total = total + acc
    return total


def _constants_for(P: QuotCtx):
    from .fields import field_ctx

    F = P.base_field
    e = 0
    x = F.order
    while x > 1:
        x //= F.p
        e += 1
    return carlitz_constants(field_ctx(F.p, e, F.modulus if F.base is not None else None))


@dataclass
class PrimeReport:
    """Both sides of a congruence at one monic irreducible P."""

    P: tuple[int, ...]
    lhs: tuple[int, ...] | None
    rhs: tuple[int, ...] | None
    excluded: str | None = None
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.excluded is None and self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"P": list(self.P), "lhs": None if self.lhs is None else list(self.lhs),
                "rhs": None if self.rhs is None else list(self.rhs),
                "excluded": self.excluded, "ok": self.ok, **self.info}


def _gammas(eps, gamma, ctx):
    if gamma is None:
        return tuple(gamma_root(e, ctx) for e in eps)
    gamma = tuple(gamma)
    Fqp = ctx.Fqp
    for g, e in zip(gamma, eps):
        if Fqp.pow(g, ctx.q - 1) != e:
            raise ValueError(f"{g} is not a (q-1)-th root of {e}")
    return gamma


def _prefactor_inverse(s, gamma, Pp: QuotCtx, ctx: FieldCtx):
    """1 / prod(gamma_i Gamma_{s_i}) mod P, or None if P divides some Gamma_{s_i}."""
    K = carlitz_constants(ctx)
    acc = Pp.one()
    for si, g in zip(s, gamma):
        G = Pp.reduce(K.Gamma(si))
        if G.is_zero():
            return None
        acc = Pp.mul(acc, G.scale(g))
    return Pp.inverse(acc)


def _modulus(P) -> Poly:
    return P.P if isinstance(P, QuotCtx) else P


def verify_famzv_mcpl(s, eps, P, ctx: FieldCtx, gamma=None) -> PrimeReport:
    """Compare zeta(s; eps)_P with the twisted finite Carlitz polylogarithm combination in A'/(P)."""
    P = _modulus(P)
    s, eps = _check_signs(s, eps, ctx)
    if any(x < 1 for x in s):
        raise ValueError("the theorem needs s_i >= 1")
    gamma = _gammas(eps, gamma, ctx)
    Pq = QuotCtx(P, ctx.Fq, check=False)
    Pp = QuotCtx(P, ctx.Fqp, check=False)
    pre = _prefactor_inverse(s, gamma, Pp, ctx)
    info = {"gamma": list(gamma)}
    if pre is None:
        return PrimeReport(P.coeffs, None, None, "P divides Gamma_{s_i}", info)
    lhs = fmzv_p_component(s, eps, Pq).embed(ctx.Fqp)
    Fqp = ctx.Fqp
    total = Pp.zero()
    for j in selectors(s, ctx):
        args = [at_poly(si, ctx).u(ji).embed(Fqp).scale(g) for si, ji, g in zip(s, j, gamma)]
        li = fcmpl_component(s, args, Pp, ctx)
        total = total + Pp.mul(Pp.reduce(Poly.monomial(Fqp, sum(j))), li)
    rhs = Pp.mul(pre, total)
    return PrimeReport(P.coeffs, lhs.coeffs, rhs.coeffs, None, info)


def _bc_over_gamma_sum(s, gamma, j, r_prime: int, degP: int, ctx: FieldCtx) -> RatFunc:
    """sum_{deg P > d_0 > ... > d_{r'} >= r-1} BC_{q^{d_{r'}}-1}^{s,gamma,j} / (L_{d_0}...L_{d_{r'}} BC_{q^{d_{r'}}-1})."""
    K = carlitz_constants(ctx)
    Fqp = ctx.Fqp
    q = ctx.q
    r = len(s)
    total = RatFunc.from_int(Fqp, 0)
    for chain in combinations(range(degP - 1, r - 2, -1), r_prime + 1):
        d_last = chain[-1]
        bc = ampbcn_closed(s, gamma, j, q ** d_last - 1, ctx).value
        if bc.is_zero():
            continue
        bc_plain = ampbcn_closed((1,), (1,), (0,), q ** d_last - 1, ctx).value
        den = Poly(Fqp, (1,))
        for d in chain:
            den = den * K.L(d).embed(Fqp)
        total = total + bc / (bc_plain * RatFunc(den))
    return total


def verify_famzv_mpbcn(s, eps, r_prime: int, P, ctx: FieldCtx, gamma=None) -> PrimeReport:
    """Compare zeta(1^{r'}, s; 1^{r'}, eps)_P with the poly-Bernoulli-Carlitz expression in A'/(P)."""
    P = _modulus(P)
    s, eps = _check_signs(s, eps, ctx)
    if any(x < 1 for x in s):
        raise ValueError("the theorem needs s_i >= 1")
    if r_prime < 0:
        raise ValueError("r_prime must be >= 0")
    gamma = _gammas(eps, gamma, ctx)
    Pq = QuotCtx(P, ctx.Fq, check=False)
    Pp = QuotCtx(P, ctx.Fqp, check=False)
    info = {"gamma": list(gamma), "r_prime": r_prime}
    pre = _prefactor_inverse(s, gamma, Pp, ctx)
    if pre is None:
        return PrimeReport(P.coeffs, None, None, "P divides Gamma_{s_i}", info)
    lhs = fmzv_p_component((1,) * r_prime + s, (1,) * r_prime + eps, Pq).embed(ctx.Fqp)
    Fqp = ctx.Fqp
    total = Pp.zero()
    for j in selectors(s, ctx):
        inner = _bc_over_gamma_sum(s, gamma, j, r_prime, P.degree, ctx)
        if Pp.divides(inner.den):
            return PrimeReport(P.coeffs, lhs.coeffs, None, "P divides a BC denominator", info)
        total = total + Pp.mul(Pp.reduce(Poly.monomial(Fqp, sum(j))), Pp.reduce(inner))
    rhs = Pp.mul(pre, total)
    return PrimeReport(P.coeffs, lhs.coeffs, rhs.coeffs, None, info)
