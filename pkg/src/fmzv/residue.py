"""Residues modulo a prime and small primality helpers."""
from __future__ import annotations

from fractions import Fraction


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi."""
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


class ResidueInt:
    """An element of Z/lZ, stored as its least non-negative representative."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        self.value = value % modulus
        self.modulus = modulus

    @classmethod
    def from_fraction(cls, x: Fraction, modulus: int) -> "ResidueInt":
        x = Fraction(x)
        if x.denominator % modulus == 0:
            raise ZeroDivisionError(f"denominator of {x} is divisible by {modulus}")
        return cls(x.numerator * pow(x.denominator, -1, modulus), modulus)

    def _coerce(self, other):
        if isinstance(other, ResidueInt):
            if other.modulus != self.modulus:
                raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return ResidueInt.from_fraction(other, self.modulus).value
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ResidueInt(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ResidueInt(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ResidueInt(v - self.value, self.modulus)

    def __neg__(self):
        return ResidueInt(-self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ResidueInt(self.value * v, self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "ResidueInt":
        if self.value == 0:
            raise ZeroDivisionError(f"0 is not invertible mod {self.modulus}")
        return ResidueInt(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * ResidueInt(v, self.modulus).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self.inverse() * v

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ResidueInt(pow(self.value, e, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, ResidueInt):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ResidueInt({self.value}, {self.modulus})"

    def __str__(self):
        return f"{self.value} mod {self.modulus}"
