"""Polynomials in theta over a table field, and normalized rational functions."""
from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .fields import GF


def _strip(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Immutable polynomial sum c_i theta^i with coefficient labels in ``field``."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: GF, coeffs: Iterable[int] = ()):
        self.field = field
        self.coeffs = _strip(list(coeffs))
        self._hash = None

    # construction ------------------------------------------------------
    @classmethod
    def const(cls, field: GF, c: int) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def theta(cls, field: GF) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: GF, k: int, c: int = 1) -> "Poly":
        return cls(field, (0,) * k + (c,))

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field is not self.field:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            return Poly(self.field, (self.field.from_int(other),))
        return NotImplemented

    # basic properties --------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return self.lead == 1

    # arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add
        out = list(a)
        for i, y in enumerate(b):
            out[i] = add[out[i]][y]
        return Poly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return Poly(self.field, [neg[c] for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly(self.field)
        F = self.field
        add, mul = F.add, F.mul
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                mx = mul[x]
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add[out[i + j]][mx[y]]
        return Poly(F, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Poly":
        mc = self.field.mul[c]
        return Poly(self.field, [mc[x] for x in self.coeffs])

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly(self.field, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def frobenius(self, e: int) -> "Poly":
        """self ** e for e a power of the characteristic (additive in char p)."""
        x = e
        while x % self.field.p == 0:
            x //= self.field.p
        if x != 1:
            raise ValueError(f"{e} is not a power of the characteristic {self.field.p}")
        F = self.field
        out = [0] * (self.degree * e + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * e] = F.pow(c, e)
        return Poly(F, out)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        add, mul, sub = F.add, F.mul, F.sub
        a = list(self.coeffs)
        b = o.coeffs
        db = len(b) - 1
        inv_lead = F.inv[b[-1]]
        if len(a) - 1 < db:
            return Poly(F), self
        quot = [0] * (len(a) - db)
        for k in range(len(a) - 1, db - 1, -1):
            c = a[k]
            if c:
                c = mul[c][inv_lead]
                quot[k - db] = c
                mc = mul[c]
                for i in range(db + 1):
                    if b[i]:
                        a[k - db + i] = sub[a[k - db + i]][mc[b[i]]]
        return Poly(F, quot), Poly(F, a[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv[self.lead])

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, self._lift(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "Poly") -> tuple["Poly", "Poly", "Poly"]:
        """(g, u, v) with u*self + v*other = g, g monic."""
        F = self.field
        r0, r1 = self, self._lift(other)
        s0, s1 = Poly(F, (1,)), Poly(F)
        t0, t1 = Poly(F), Poly(F, (1,))
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        c = F.inv[r0.lead]
        return r0.scale(c), s0.scale(c), t0.scale(c)

    def embed(self, field: GF) -> "Poly":
        """Reinterpret the coefficients in an extension field (labels are preserved)."""
        if field is self.field:
            return self
        if field.p != self.field.p or field.order % self.field.order:
            raise ValueError(f"{self.field} does not embed in {field}")
        return Poly(field, self.coeffs)

    # comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == Poly(self.field, (self.field.from_int(other),)).coeffs
        if isinstance(other, Poly):
            return self.field is other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.order, self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)}, GF({self.field.order}))"

    def __str__(self):
        return format_poly(self.coeffs)


def format_poly(coeffs: Sequence[int], var: str = "θ") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"


class RatFunc:
    """num/den in F(theta) with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, _normalized: bool = False):
        if den is None:
            den = Poly(num.field, (1,))
        if den.field is not num.field:
            raise ValueError("numerator and denominator live over different fields")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _normalized:
            if num.is_zero():
                den = Poly(num.field, (1,))
            elif not den.is_one():
                g = num.gcd(den)
                if not g.is_one():
                    num, den = num.exact_div(g), den.exact_div(g)
                if den.lead != 1:
                    c = num.field.inv[den.lead]
                    num, den = num.scale(c), den.scale(c)
        self.num = num
        self.den = den

    @property
    def field(self) -> GF:
        return self.num.field

    @classmethod
    def from_int(cls, field: GF, n: int) -> "RatFunc":
        return cls(Poly(field, (field.from_int(n),)), None, True)

    def _lift(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.field is not self.field:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other
        if isinstance(other, Poly):
            if other.field is not self.field:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return RatFunc(other, None, True)
        if isinstance(other, int):
            return RatFunc.from_int(self.field, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        g = self.den.gcd(o.den)
        if g.is_one():
            return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)
        d1, d2 = self.den.exact_div(g), o.den.exact_div(g)
        return RatFunc(self.num * d2 + o.num * d1, self.den * d2)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.num.is_zero() or o.num.is_zero():
            return RatFunc(Poly(self.field), None, True)
        # cross-cancel to keep degrees small
        g1 = self.num.gcd(o.den)
        g2 = o.num.gcd(self.den)
        n1, d2 = (self.num, o.den) if g1.is_one() else (self.num.exact_div(g1), o.den.exact_div(g1))
        n2, d1 = (o.num, self.den) if g2.is_one() else (o.num.exact_div(g2), self.den.exact_div(g2))
        num, den = n1 * n2, d1 * d2
        if den.lead != 1:
            c = self.field.inv[den.lead]
            num, den = num.scale(c), den.scale(c)
        return RatFunc(num, den, True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int) -> "RatFunc":
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num ** e, self.den ** e, True)

    def frobenius(self, e: int) -> "RatFunc":
        return RatFunc(self.num.frobenius(e), self.den.frobenius(e), True)

    def embed(self, field: GF) -> "RatFunc":
        if field is self.field:
            return self
        return RatFunc(self.num.embed(field), self.den.embed(field), True)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_dict(self) -> dict:
        return {"num": list(self.num.coeffs), "den": list(self.den.coeffs)}


def enumerate_monic(field: GF, d: int) -> list[Poly]:
    """All field.order**d monic polynomials of degree d, lexicographic from the top coefficient."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    Q = field.order
    out = []
    for x in range(Q ** d):
        low = [(x // Q ** i) % Q for i in range(d)]
        out.append(Poly(field, low + [1]))
    return out


def is_irreducible_poly(P: Poly) -> bool:
    if P.degree < 1:
        return False
    for k in range(1, P.degree // 2 + 1):
        for g in enumerate_monic(P.field, k):
            if (P % g).is_zero():
                return False
    return True


def monic_irreducibles(field: GF, d: int) -> list[Poly]:
    return [P for P in enumerate_monic(field, d) if is_irreducible_poly(P)]
