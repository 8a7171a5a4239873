"""Small finite fields as lookup tables, built as towers over a prime field.

An element of an extension of degree k over a base field with B elements is
the integer sum c_i B^i, where c_0 + c_1 v + ... + c_{k-1} v^{k-1} is its
representative modulo the defining polynomial.  Base-field elements therefore
keep their integer labels inside every extension, which makes the embedding
F_q -> F_{q'} the identity on labels.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product


# Table fields need order^2 entries per operation; refuse anything larger.
MAX_FIELD_ORDER = int(os.environ.get("FMZV_MAX_FIELD", "4096"))


class GF:
    """A finite field with add/mul/neg/inv tables indexed by integer labels."""

    def __init__(self, p: int, order: int, add, mul, base: "GF | None" = None, modulus: tuple = ()):
        self.p = p
        self.order = order
        self.base = base
        self.modulus = modulus  # coefficients (low -> high, monic) of the defining polynomial over base
        self.add = add
        self.mul = mul
        self.neg = [0] * order
        self.inv = [0] * order
        for a in range(order):
            row = add[a]
            for b in range(order):
                if row[b] == 0:
                    self.neg[a] = b
                    break
            if a:
                mrow = mul[a]
                for b in range(1, order):
                    if mrow[b] == 1:
                        self.inv[a] = b
                        break
        self.sub = [[add[a][self.neg[b]] for b in range(order)] for a in range(order)]

    @classmethod
    def prime(cls, p: int) -> "GF":
        add = [[(a + b) % p for b in range(p)] for a in range(p)]
        mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        return cls(p, p, add, mul)

    @classmethod
    def extension(cls, base: "GF", degree: int, modulus: tuple | None = None) -> "GF":
        """Extend ``base`` by a monic irreducible polynomial of the given degree.

        Without an explicit ``modulus`` the lexicographically least monic
        irreducible polynomial is used, comparing coefficients from the top.
        """
        if degree == 1:
            return base
        if modulus is None:
            modulus = least_irreducible(base, degree)
        else:
            modulus = tuple(modulus)
            if len(modulus) != degree + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus {modulus} is not monic of degree {degree}")
            if not is_irreducible(base, modulus):
                raise ValueError(f"modulus {modulus} is reducible over F_{base.order}")
        B = base.order
        order = B ** degree
        if order > MAX_FIELD_ORDER:
            raise ValueError(f"GF({order}) exceeds the table-field limit {MAX_FIELD_ORDER}")
        vecs = [tuple((x // B ** i) % B for i in range(degree)) for x in range(order)]

        def encode(v):
            return sum(c * B ** i for i, c in enumerate(v))

        badd, bmul, bsub = base.add, base.mul, base.sub
        add = [[encode([badd[x][y] for x, y in zip(va, vb)]) for vb in vecs] for va in vecs]
        mul = []
        for va in vecs:
            row = []
            for vb in vecs:
                prod = [0] * (2 * degree - 1)
                for i, x in enumerate(va):
                    if x:
                        for j, y in enumerate(vb):
                            if y:
                                prod[i + j] = badd[prod[i + j]][bmul[x][y]]
                for k in range(2 * degree - 2, degree - 1, -1):
                    c = prod[k]
                    if c:
                        for i in range(degree):
                            prod[k - degree + i] = bsub[prod[k - degree + i]][bmul[c][modulus[i]]]
                        prod[k] = 0
                row.append(encode(prod[:degree]))
            mul.append(row)
        return cls(base.p, order, add, mul, base, modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv[a], -e
        result = 1
        mul = self.mul
        while e:
            if e & 1:
                result = mul[result][a]
            e >>= 1
            if e:
                a = mul[a][a]
        return result

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_p -> this field."""
        return n % self.p

    def units(self) -> range:
        return range(1, self.order)

    def __repr__(self):
        return f"GF({self.order})"

    def __reduce__(self):
        return (_rebuild_field, (self.p, self._tower()))

    def _tower(self) -> tuple:
        if self.base is None:
            return ()
        return self.base._tower() + (self.modulus,)


def _rebuild_field(p: int, tower: tuple) -> GF:
    return _field_from_tower(p, tower)


@lru_cache(maxsize=None)
def _field_from_tower(p: int, tower: tuple) -> GF:
    F = GF.prime(p)
    for mod in tower:
        F = GF.extension(F, len(mod) - 1, mod)
    return F


def _poly_rem(F: GF, a: list, m: tuple) -> list:
    a = list(a)
    dm = len(m) - 1
    lead_inv = F.inv[m[-1]]
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k]
        if c:
            c = F.mul[c][lead_inv]
            for i in range(dm + 1):
                a[k - dm + i] = F.sub[a[k - dm + i]][F.mul[c][m[i]]]
    a = a[:dm]
    while a and a[-1] == 0:
        a.pop()
    return a


def is_irreducible(F: GF, f: tuple) -> bool:
    """Trial division of f by every monic polynomial of degree <= deg f / 2."""
    d = len(f) - 1
    if d <= 0:
        return False
    for k in range(1, d // 2 + 1):
        for low in product(range(F.order), repeat=k):
            g = tuple(low) + (1,)
            if not _poly_rem(F, f, g):
                return False
    return True


def least_irreducible(F: GF, degree: int) -> tuple:
    """Lexicographically least monic irreducible polynomial (top coefficient first)."""
    for x in range(F.order ** degree):
        low = tuple((x // F.order ** i) % F.order for i in range(degree))
        f = low + (1,)
        if is_irreducible(F, f):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {degree} over GF({F.order})")


@dataclass(frozen=True)
class FieldCtx:
    """F_q with q = p^e and its extension F_{q'} with q' = q^(q-1)."""

    p: int
    e: int
    Fq: GF

    @property
    def q(self) -> int:
        return self.p ** self.e

    @property
    def qp(self) -> int:
        return self.q ** (self.q - 1)

    @cached_property
    def Fqp(self) -> GF:
        """Built on first use, since it is much larger than F_q."""
        return GF.extension(self.Fq, self.q - 1) if self.q > 2 else self.Fq

    def describe(self) -> dict:
        out = {"p": self.p, "q_exp": self.e, "q": self.q, "q_prime": self.qp,
               "Fq_modulus": list(self.Fq.modulus)}
        if self.qp <= MAX_FIELD_ORDER:
            out["Fqp_modulus"] = list(self.Fqp.modulus) if self.Fqp is not self.Fq else []
        return out


@lru_cache(maxsize=None)
def field_ctx(p: int, e: int = 1, prime_poly: tuple | None = None) -> FieldCtx:
    """Build (and cache) the field context for q = p^e.

    ``prime_poly`` optionally fixes the defining polynomial of F_q over F_p
    (coefficients low -> high, monic of degree e).
    """
    from ..residue import is_prime

    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if e < 1:
        raise ValueError("q exponent must be >= 1")
    Fp = GF.prime(p)
    Fq = GF.extension(Fp, e, prime_poly) if e > 1 else Fp
    return FieldCtx(p, e, Fq)


def ctx_for_q(q: int) -> FieldCtx:
    for p in range(2, q + 1):
        e, x = 0, q
        while x % p == 0:
            x //= p
            e += 1
        if x == 1 and e:
            return field_ctx(p, e)
        if q % p == 0:
            break
    raise ValueError(f"{q} is not a prime power")
