"""Per-prime components of (alternating) finite multiple zeta values."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..residue import ResidueInt, is_prime
from .bernoulli import _check_index, ampbn_closed


@dataclass(frozen=True)
class FmzvComponent:
    prime: int
    index: tuple[int, ...]
    signs: tuple[int, ...]
    value: ResidueInt


def _nested_sum(s: Sequence[int], bases: Sequence[int], l: int) -> int:
    """sum_{l > n_1 > ... > n_r > 0} prod base_i^{n_i} / n_i^{s_i}  (mod l)."""
    r = len(s)
    if r == 0:
        return 1 % l
    if r >= l:
        return 0

    def f(i: int, n: int) -> int:
        e = s[i]
        return pow(bases[i], n, l) * pow(n, -e, l) % l

    cur = [0] + [f(r - 1, n) for n in range(1, l)]
    for i in range(r - 2, -1, -1):
        nxt = [0] * l
        running = 0
        for n in range(1, l):
            nxt[n] = f(i, n) * running % l
            running = (running + cur[n]) % l
        cur = nxt
    return sum(cur) % l


def _require_prime(l: int) -> None:
    if not is_prime(l):
        raise ValueError(f"{l} is not prime")


def fmzv_component(s: Sequence[int], eps: Sequence[int], l: int) -> ResidueInt:
    """The l-component of zeta_A(s; eps): a nested harmonic sum below l.

    >>> fmzv_component((1,), (1,), 5)
    ResidueInt(0, 5)
    """
    _require_prime(l)
    s, eps = _check_index(s, eps)
    return ResidueInt(_nested_sum(s, [e % l for e in eps], l), l)


def finite_mpl_component(s: Sequence[int], a: Sequence, l: int) -> ResidueInt:
    """The l-component of the finite multiple polylogarithm at (a_1, ..., a_r)."""
    _require_prime(l)
    s = tuple(int(x) for x in s)
    if len(a) != len(s):
        raise ValueError(f"index {s} and arguments {a} have different lengths")
    bases = []
    for x in a:
        if isinstance(x, ResidueInt):
            if x.modulus != l:
                raise ValueError(f"argument {x} is not reduced mod {l}")
            bases.append(x.value)
        else:
            bases.append(int(x) % l)
    return ResidueInt(_nested_sum(s, bases, l), l)


@dataclass
class ZeroResultReport:
    """Both sides of zeta_A(1^{r'}, s; 1^{r'}, eps)_l = -C_{l-r'-2}^{(s_1-1, s_2, ...); eps}."""

    index: tuple[int, ...]
    signs: tuple[int, ...]
    r_prime: int
    prime: int
    lhs: int
    rhs: int | None
    rational: Fraction
    exceptional: bool

    @property
    def holds(self) -> bool:
        return not self.exceptional and self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {
            "index": list(self.index),
            "signs": list(self.signs),
            "r_prime": self.r_prime,
            "prime": self.prime,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "C": str(self.rational),
            "exceptional": self.exceptional,
            "holds": self.holds,
        }


def verify_0result(s: Sequence[int], eps: Sequence[int], r_prime: int, l: int) -> ZeroResultReport:
    """Check the congruence between an AFMZV component and a C-number.

    With r_prime = 0 this is zeta_A(s;eps)_l = -C_{l-2}^{(s_1-1,...);eps};
    otherwise r_prime ones are prepended to s and eps and the C-index drops to
    l - r_prime - 2.  A C-value whose denominator is divisible by l is flagged
    as exceptional rather than reduced.
    """
    _require_prime(l)
    if l == 2:
        raise ValueError("the congruence is stated for odd primes")
    s, eps = _check_index(s, eps)
    if not s:
        raise ValueError("depth must be >= 1")
    if r_prime < 0:
        raise ValueError("r_prime must be >= 0")
    n = l - r_prime - 2
    if n < 0:
        raise ValueError(f"l={l} too small for r'={r_prime}")
    lhs = fmzv_component((1,) * r_prime + s, (1,) * r_prime + eps, l).value
    shifted = (s[0] - 1,) + s[1:]
    c = ampbn_closed(shifted, eps, n, "C")
    if c.denominator % l == 0:
        return ZeroResultReport(s, eps, r_prime, l, lhs, None, c, True)
    rhs = (-c.numerator * pow(c.denominator, -1, l)) % l
    return ZeroResultReport(s, eps, r_prime, l, lhs, rhs, c, False)
