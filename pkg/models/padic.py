"""p-adic integers as finite base-p digit vectors, and binomial coefficients mod p."""
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence, Tuple

from utils.errors import FieldMismatch, InsufficientDigitPrecision


@dataclass(frozen=True)
class PadicInt:
    """
    A p-adic integer known modulo p^K.

    Attributes:
        p: The prime
        digits: d_0 ... d_{K-1}, least significant first
    """

    p: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        if not self.digits:
            raise ValueError("a p-adic integer needs at least one digit")
        if any(not 0 <= d < self.p for d in self.digits):
            raise ValueError(f"digits must lie in [0, {self.p})")

    @property
    def prec(self) -> int:
        return len(self.digits)

    @property
    def modulus(self) -> int:
        return self.p ** self.prec

    def value(self) -> int:
        """The representative in [0, p^K)."""
        n = 0
        for d in reversed(self.digits):
            n = n * self.p + d
        return n

    def signed_value(self) -> int:
        """The representative in (-p^K/2, p^K/2]."""
        n = self.value()
        return n - self.modulus if 2 * n > self.modulus else n

    def valuation(self) -> int:
        """v_p(s); equals K when s is zero to the known precision."""
        for t, d in enumerate(self.digits):
            if d:
                return t
        return self.prec

    def __add__(self, other):
        if isinstance(other, int):
            return padic_add_int(self, other) if other >= 0 else padic_from_int(
                self.value() + other, self.p, self.prec)
        return padic_add(self, other)

    def __neg__(self) -> "PadicInt":
        return padic_neg(self)

    def __repr__(self) -> str:
        return f"PadicInt(p={self.p}, digits={list(self.digits)})"


def padic_from_int(n: int, p: int, k: int) -> PadicInt:
    """Base-p digits of n mod p^K; negative n wraps to p^K + n."""
    if k < 1:
        raise ValueError(f"digit precision must be >= 1, got {k}")
    n %= p ** k
    digits = []
    for _ in range(k):
        n, d = divmod(n, p)
        digits.append(d)
    return PadicInt(p, tuple(digits))


def padic_from_digits(digits: Sequence[int], p: int) -> PadicInt:
    return PadicInt(p, tuple(int(d) for d in digits))


def padic_add_int(s: PadicInt, i: int) -> PadicInt:
    """s + i for a nonnegative integer i, digitwise with carries, kept to K digits."""
    if i < 0:
        raise ValueError("padic_add_int takes a nonnegative integer")
    out = []
    carry = i
    for d in s.digits:
        carry, r = divmod(d + carry, s.p)
        out.append(r)
    return PadicInt(s.p, tuple(out))


def padic_add(s: PadicInt, t: PadicInt) -> PadicInt:
    """Sum of two p-adic integers to the smaller digit precision."""
    if s.p != t.p:
        raise FieldMismatch(f"cannot add {s.p}-adic and {t.p}-adic integers")
    out = []
    carry = 0
    for a, b in zip(s.digits, t.digits):
        carry, r = divmod(a + b + carry, s.p)
        out.append(r)
    return PadicInt(s.p, tuple(out))


def padic_neg(s: PadicInt) -> PadicInt:
    """-s by complement: digits of p^K - s mod p^K."""
    return padic_from_int(-s.value(), s.p, s.prec)


def _base_p(n: int, p: int) -> Tuple[int, ...]:
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return tuple(out)


def binom_mod_p(s: PadicInt, j: int) -> int:
    """
    binom(s, j) mod p by the digitwise product of binom(d_t(s), d_t(j)).

    Raises:
        InsufficientDigitPrecision: when p^K <= j, so the low digits of s do not fix the answer
    """
    if j < 0:
        return 0
    p = s.p
    if s.modulus <= j:
        raise InsufficientDigitPrecision(f"p^K = {p}^{s.prec} does not exceed j = {j}")
    result = 1
    for t, dj in enumerate(_base_p(j, p)):
        result = (result * comb(s.digits[t], dj)) % p
        if not result:
            return 0
    return result


@lru_cache(maxsize=4096)
def binomial_row(s: PadicInt, count: int) -> Tuple[int, ...]:
    """binom(s, j) mod p for j = 0 .. count-1."""
    return tuple(binom_mod_p(s, j) for j in range(count))
