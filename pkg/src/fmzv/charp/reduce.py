"""Rewriting a finite (alternating) multiple zeta value with an arbitrary
integer index as a k-linear combination of ones with all-positive indices.

Everything rests on the vanishing S_d(-s) = 0 for d >= s + 1: once an entry
s_i <= 0 appears, every degree from that position on is bounded, and those
bounded sums are plain elements of k = F_q(theta).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .carlitz import QuotCtx, power_sum_exact
from .fields import FieldCtx
from .finite import PrimeReport, fmzv_p_component
from .poly import Poly, RatFunc, monic_irreducibles


@lru_cache(maxsize=None)
def _recursive_bound(s: int) -> int:
    if s == 0:
        return 1
    return max(_recursive_bound(t) + 1 for t in range(s))


@dataclass
class VanishingBound:
    s: int
    N: int
    checks: dict = field(default_factory=dict)  # d -> S_d(-s) == 0, over the context given

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"s": self.s, "N": self.N, "checks": {str(d): v for d, v in self.checks.items()},
                "ok": self.ok}


def vanishing_bound(s: int, ctx: FieldCtx | None = None, extra: int = 2) -> VanishingBound:
    """N(s) with S_d(-s) = 0 for all d >= N(s); checks N(s) <= d <= N(s)+extra when ctx is given."""
    if s < 0:
        raise ValueError("vanishing_bound needs s >= 0")
    N = s + 1
    rec = _recursive_bound(s)
    if rec != N:
        raise AssertionError(f"recursive bound {rec} differs from s+1 = {N}")
    checks = {}
    if ctx is not None:
        for d in range(N, N + extra + 1):
            checks[d] = power_sum_exact(d, -s, ctx).num.is_zero()
    return VanishingBound(s, N, checks)


def _bounded_sum(s: tuple, eps: tuple, N: int, ctx: FieldCtx) -> RatFunc:
    """sum_{N > d_1 > ... > d_r >= 0} prod eps_i^{d_i} S_{d_i}(s_i), exactly in k."""
    F = ctx.Fq
    zero = RatFunc.from_int(F, 0)
    if not s:
        return RatFunc.from_int(F, 1)
    if len(s) > N:
        return zero

    def term(i, d):
        return power_sum_exact(d, s[i], ctx) * F.pow(eps[i], d)

    cur = [term(len(s) - 1, d) for d in range(N)]
    for i in range(len(s) - 2, -1, -1):
        nxt, running = [], zero
        for d in range(N):
            nxt.append(term(i, d) * running)
            running = running + cur[d]
        cur = nxt
    total = zero
    for v in cur:
        total = total + v
    return total


def _coeff_str(c: RatFunc) -> tuple[str, str]:
    neg = -c
    if (neg.den.coeffs, neg.num.coeffs[::-1]) < (c.den.coeffs, c.num.coeffs[::-1]):
        return "-", str(neg)
    return "+", str(c)


@dataclass
class ZetaCombination:
    """constant + sum coeff * zeta(index; signs), every index entry >= 1."""

    ctx: FieldCtx
    terms: dict  # (index, signs) -> RatFunc, nonzero coefficients only
    constant: RatFunc
    valid_from: int = 1  # deg P from which the identity holds componentwise
    depth: int = 0  # deepest recursion level used

    def evaluate(self, P: QuotCtx) -> Poly:
        total = P.reduce(self.constant)
        for (idx, sg), c in self.terms.items():
            total = total + P.mul(P.reduce(c), fmzv_p_component(idx, sg, P))
        return total

    def denominators(self) -> list[Poly]:
        return [self.constant.den] + [c.den for c in self.terms.values()]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]), kv[0]))

    def to_dict(self) -> dict:
        return {
            "terms": [{"coeff_num": list(c.num.coeffs), "coeff_den": list(c.den.coeffs),
                       "index": list(idx), "signs": list(sg)} for (idx, sg), c in self.sorted_terms()],
            "constant_num": list(self.constant.num.coeffs),
            "constant_den": list(self.constant.den.coeffs),
            "valid_from_deg": self.valid_from,
        }

    def __str__(self):
        parts = []
        for (idx, sg), c in self.sorted_terms():
            sign, body = _coeff_str(c)
            args = ",".join(map(str, idx))
            if any(e != 1 for e in sg):
                args += ";" + ",".join(map(str, sg))
            body = "" if body == "1" else (body if c.is_polynomial() and len(c.num.coeffs) == 1 else f"({body})") + "*"
            parts.append((sign, f"{body}ζ({args})"))
        if not self.constant.num.is_zero() or not parts:
            parts.append(_coeff_str(self.constant))
        out = ""
        for k, (sign, body) in enumerate(parts):
            if k == 0:
                out = body if sign == "+" else f"-{body}"
            else:
                out += f" {'−' if sign == '-' else '+'} {body}"
        return out


def _add(acc: dict, key, c: RatFunc) -> None:
    v = acc.get(key)
    v = c if v is None else v + c
    if v.num.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = v


def reduce_index(s: Sequence[int], eps: Sequence[int], ctx: FieldCtx) -> ZetaCombination:
    """Express zeta(s; eps) through all-positive-index values plus a constant in k."""
    s = tuple(int(x) for x in s)
    eps = tuple(int(e) for e in eps)
    if len(s) != len(eps):
        raise ValueError("index and signs differ in length")
    if any(not 0 < e < ctx.q for e in eps):
        raise ValueError(f"signs must be nonzero labels of F_{ctx.q}")
    F = ctx.Fq
    one = RatFunc.from_int(F, 1)
    if all(x >= 1 for x in s):
        return ZetaCombination(ctx, {(s, eps): one} if s else {}, RatFunc.from_int(F, 0 if s else 1))
    M = next(i for i, x in enumerate(s) if x <= 0)
    N = vanishing_bound(-s[M]).N
    memo: dict = {}
    depth = [0]

    def head(t: tuple, et: tuple, level: int) -> dict:
        # sum over deg P > d_1 > ... > d_m >= N, as {key: coeff}; the empty key is the constant
        depth[0] = max(depth[0], level)
        if not t:
            return {(): one}
        if (t, et) in memo:
            return memo[(t, et)]
        out = {(t, et): one}
        for m in range(len(t)):
            c = _bounded_sum(t[m:], et[m:], N, ctx)
            if c.num.is_zero():
                continue
            for key, v in head(t[:m], et[:m], level + 1).items():
                _add(out, key, -(c * v))
        memo[(t, et)] = out
        return out

    acc: dict = {}
    for Mp in range(M + 1):
        c = _bounded_sum(s[Mp:], eps[Mp:], N, ctx)
        if c.num.is_zero():
            continue
        for key, v in head(s[:Mp], eps[:Mp], 1).items():
            _add(acc, key, c * v)
    constant = acc.pop((), RatFunc.from_int(F, 0))
    return ZetaCombination(ctx, acc, constant, valid_from=N, depth=depth[0])


@dataclass
class ReductionReport:
    index: tuple
    signs: tuple
    combination: ZetaCombination
    rows: list

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows if r.excluded is None)

    @property
    def excluded(self) -> list:
        return [r for r in self.rows if r.excluded is not None]

    def to_dict(self) -> dict:
        return {"index": list(self.index), "signs": list(self.signs),
                "combination": self.combination.to_dict(), "pretty": str(self.combination),
                "ok": self.ok, "primes": [r.to_dict() for r in self.rows]}


def verify_reduction(s: Sequence[int], eps: Sequence[int], deg_bound: int, ctx: FieldCtx) -> ReductionReport:
    """Evaluate zeta(s; eps)_P and its reduction at every monic irreducible P of degree <= deg_bound."""
    comb = reduce_index(s, eps, ctx)
    s, eps = tuple(s), tuple(eps)
    rows = []
    for d in range(1, deg_bound + 1):
        for P in monic_irreducibles(ctx.Fq, d):
            Q = QuotCtx(P, ctx.Fq, check=False)
            if d < comb.valid_from:
                rows.append(PrimeReport(P.coeffs, None, None, f"deg P < {comb.valid_from}"))
                continue
            if any(Q.divides(den) for den in comb.denominators()):
                rows.append(PrimeReport(P.coeffs, None, None, "P divides a coefficient denominator"))
                continue
            lhs = fmzv_p_component(s, eps, Q)
            rhs = comb.evaluate(Q)
            rows.append(PrimeReport(P.coeffs, lhs.coeffs, rhs.coeffs))
    return ReductionReport(s, eps, comb, rows)
