"""Carlitz constants, power sums S_d(s), and residue rings A/(P)."""
from __future__ import annotations

import os
from functools import lru_cache

from .fields import GF, FieldCtx
from .poly import Poly, RatFunc, enumerate_monic, is_irreducible_poly

ENUMERATION_BUDGET = int(os.environ.get("FMZV_ENUM_BUDGET", "100000"))


def base_q_digits(n: int, q: int) -> list[int]:
    digits = []
    while n:
        digits.append(n % q)
        n //= q
    return digits


class CarlitzConstants:
    """[n] = theta^{q^n} - theta, D_n, L_n and the Carlitz factorial Pi(n) = Gamma_{n+1}.

    L_n carries the sign (-1)^n.  Entries are computed on demand and cached;
    ``n_max`` only sets how many are built eagerly.
    """

    def __init__(self, ctx: FieldCtx, n_max: int = 0):
        self.ctx = ctx
        self.F = ctx.Fq
        self.q = ctx.q
        self._bracket: dict[int, Poly] = {}
        self._D: dict[int, Poly] = {0: Poly(self.F, (1,))}
        self._L: dict[int, Poly] = {0: Poly(self.F, (1,))}
        self._pi: dict[int, Poly] = {}
        for n in range(n_max + 1):
            self.D(n)
            self.L(n)

    def bracket(self, n: int) -> Poly:
        if n < 1:
            raise ValueError("[n] is defined for n >= 1")
        if n not in self._bracket:
            F = self.F
            self._bracket[n] = Poly.monomial(F, self.q ** n) - Poly.theta(F)
        return self._bracket[n]

    def D(self, n: int) -> Poly:
        if n not in self._D:
            # D_n = [n] D_{n-1}^q
            self._D[n] = self.bracket(n) * self.D(n - 1).frobenius(self.q)
        return self._D[n]

    def L(self, n: int) -> Poly:
        if n not in self._L:
            self._L[n] = -(self.bracket(n) * self.L(n - 1))
        return self._L[n]

    def Pi(self, n: int) -> Poly:
        """Carlitz factorial: prod D_j^{alpha_j} over the base-q digits alpha_j of n."""
        if n < 0:
            raise ValueError("Pi(n) needs n >= 0")
        if n not in self._pi:
            out = Poly(self.F, (1,))
            for j, a in enumerate(base_q_digits(n, self.q)):
                if a:
                    out = out * self.D(j) ** a
            self._pi[n] = out
        return self._pi[n]

    def Gamma(self, m: int) -> Poly:
        """Carlitz gamma Gamma_m = Pi(m - 1), m >= 1."""
        if m < 1:
            raise ValueError("Gamma_m needs m >= 1")
        return self.Pi(m - 1)

    def table(self, n_max: int) -> dict:
        return {
            "bracket": {n: self.bracket(n) for n in range(1, n_max + 1)},
            "D": {n: self.D(n) for n in range(n_max + 1)},
            "L": {n: self.L(n) for n in range(n_max + 1)},
            "Gamma": {m: self.Gamma(m) for m in range(1, self.q ** n_max + 1)},
        }


@lru_cache(maxsize=None)
def carlitz_constants(ctx: FieldCtx, n_max: int = 0) -> CarlitzConstants:
    return _shared_constants(ctx) if n_max == 0 else CarlitzConstants(ctx, n_max)


@lru_cache(maxsize=None)
def _shared_constants(ctx: FieldCtx) -> CarlitzConstants:
    return CarlitzConstants(ctx)


def _check_budget(field: GF, d: int) -> None:
    if field.order ** d > ENUMERATION_BUDGET:
        raise ValueError(
            f"enumerating {field.order}^{d} monic polynomials exceeds the budget {ENUMERATION_BUDGET}"
        )


@lru_cache(maxsize=None)
def power_sum_exact(d: int, s: int, ctx: FieldCtx) -> RatFunc:
    """S_d(s) = sum over monic a of degree d of a^{-s}, exactly in k = F_q(theta)."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    F = ctx.Fq
    _check_budget(F, d)
    if s <= 0:
        total = Poly(F)
        for a in enumerate_monic(F, d):
            total = total + a ** (-s)
        return RatFunc(total, None, True)
    total = RatFunc(Poly(F))
    for a in enumerate_monic(F, d):
        total = total + RatFunc(Poly(F, (1,)), a ** s, True)
    return total


class QuotCtx:
    """The residue ring R[theta]/(P) for monic irreducible P in F_q[theta].

    R is the scalar field: F_q itself or an extension such as F_{q'}.  Residues
    are ``Poly`` objects over R of degree < deg P.
    """

    def __init__(self, P: Poly, scalar_field: GF | None = None, check: bool = True):
        if not P.is_monic() or P.degree < 1:
            raise ValueError(f"{P} is not a monic polynomial of positive degree")
        if check and not is_irreducible_poly(P):
            raise ValueError(f"{P} is reducible")
        self.P = P
        self.base_field = P.field
        self.field = scalar_field or P.field
        self.modulus = P.embed(self.field)
        self.deg = P.degree
        self._power_sums: dict[tuple[int, int], Poly] = {}
        self._inv_cache: dict[tuple, Poly] = {}

    def zero(self) -> Poly:
        return Poly(self.field)

    def one(self) -> Poly:
        return Poly(self.field, (1,))

    def reduce(self, x) -> Poly:
        """Image in R[theta]/(P) of an int, Poly or RatFunc (denominator must be coprime to P)."""
        if isinstance(x, int):
            return Poly(self.field, (self.field.from_int(x),))
        if isinstance(x, Poly):
            return x.embed(self.field) % self.modulus
        if isinstance(x, RatFunc):
            num = x.num.embed(self.field) % self.modulus
            if x.den.is_one():
                return num
            return self.mul(num, self.inverse(x.den.embed(self.field) % self.modulus))
        raise TypeError(f"cannot reduce {type(x).__name__} modulo P")

    def divides(self, x: Poly) -> bool:
        """True if P divides x."""
        return (x.embed(self.field) % self.modulus).is_zero()

    def mul(self, a: Poly, b: Poly) -> Poly:
        return (a * b) % self.modulus

    def pow(self, a: Poly, e: int) -> Poly:
        if e < 0:
            a, e = self.inverse(a), -e
        result = self.one()
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def inverse(self, a: Poly) -> Poly:
        key = a.coeffs
        if key in self._inv_cache:
            return self._inv_cache[key]
        g, u, _ = (a % self.modulus).xgcd(self.modulus)
        if not g.is_one():
            raise ZeroDivisionError(f"{a} is not invertible modulo {self.P}")
        inv = u % self.modulus
        self._inv_cache[key] = inv
        return inv

    def power_sum(self, d: int, s: int) -> Poly:
        """S_d(s) mod P, summing inverses directly for s > 0 (requires d < deg P)."""
        key = (d, s)
        if key in self._power_sums:
            return self._power_sums[key]
        if d < 0:
            raise ValueError("degree must be non-negative")
        if s > 0 and d >= self.deg:
            raise ValueError(f"S_{d}({s}) mod P needs d < deg P = {self.deg}")
        _check_budget(self.base_field, d)
        total = self.zero()
        for a in enumerate_monic(self.base_field, d):
            ar = a.embed(self.field) % self.modulus
            total = total + (self.pow(self.inverse(ar), s) if s > 0 else self.pow(ar, -s))
        total = total % self.modulus
        self._power_sums[key] = total
        return total

    def describe(self) -> dict:
        return {"P": list(self.P.coeffs), "deg": self.deg, "scalar_field_order": self.field.order}

    def __repr__(self):
        return f"QuotCtx(P={self.P}, GF({self.field.order}))"


def power_sum_mod(d: int, s: int, P: QuotCtx) -> Poly:
    return P.power_sum(d, s)


@lru_cache(maxsize=None)
def quot_ctx(P: Poly, scalar_field: GF | None = None) -> QuotCtx:
    return QuotCtx(P, scalar_field)
