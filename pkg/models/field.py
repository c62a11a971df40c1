"""The finite field F_q, q = p^e, its elements, and dense polynomials over it.

Elements are stored by integer index: the coefficient vector (c_0, ..., c_{e-1}) of
the element in the polynomial basis is the base-p expansion of the index.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import sympy

from utils.errors import DegreeMismatch, DivisionByZero, FieldMismatch, NonPrimeP, ParseError, ReducibleModulus

logger = logging.getLogger(__name__)


# Polynomials over Z/p, low-to-high coefficient lists. Only used before a field exists.

def _zp_trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_mod(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """Remainder of a modulo the monic polynomial b over Z/p."""
    r = [c % p for c in a]
    db = len(b) - 1
    for top in range(len(r) - 1, db - 1, -1):
        c = r[top]
        if c:
            shift = top - db
            for k in range(db + 1):
                r[shift + k] = (r[shift + k] - c * b[k]) % p
    return _zp_trim(r[:db] if db > 0 else [])


def _zp_mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _zp_trim(prod)


def _zp_sub(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    width = max(len(a), len(b))
    return _zp_trim([((a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0)) % p
                     for k in range(width)])


def _zp_divmod(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[List[int], List[int]]:
    """Quotient and remainder of a by a nonzero b over Z/p."""
    rem = [c % p for c in a]
    db = len(b) - 1
    if len(rem) <= db:
        return [], _zp_trim(rem)
    quot = [0] * (len(rem) - db)
    lead_inv = pow(b[-1], p - 2, p)
    for top in range(len(rem) - 1, db - 1, -1):
        c = (rem[top] * lead_inv) % p
        if c:
            shift = top - db
            quot[shift] = c
            for k, y in enumerate(b):
                rem[shift + k] = (rem[shift + k] - c * y) % p
    return _zp_trim(quot), _zp_trim(rem[:db])


def _zp_mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> List[int]:
    return _zp_mod(_zp_mul(a, b, p), modulus, p)


def _monic_candidates(p: int, degree: int) -> Iterator[Tuple[int, ...]]:
    """Monic polynomials of a degree, lexicographic on the low-to-high coefficient tuple."""
    for lower in itertools.product(range(p), repeat=degree):
        yield tuple(lower) + (1,)


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    e = len(modulus) - 1
    for d in range(1, e // 2 + 1):
        for divisor in _monic_candidates(p, d):
            if not _zp_mod(modulus, divisor, p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """F_q with q = p^e, given by a monic irreducible modulus over Z/p (low-to-high)."""

    p: int
    e: int
    modulus: Tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.e

    @cached_property
    def _vectors(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(_index_to_vector(i, self.p, self.e) for i in range(self.q))

    @cached_property
    def add_table(self) -> Tuple[Tuple[int, ...], ...]:
        p, e = self.p, self.e
        rows = []
        for x in self._vectors:
            rows.append(tuple(_vector_to_index([(x[k] + y[k]) % p for k in range(e)], p)
                              for y in self._vectors))
        return tuple(rows)

    @cached_property
    def neg_table(self) -> Tuple[int, ...]:
        return tuple(_vector_to_index([(-c) % self.p for c in x], self.p) for x in self._vectors)

    @cached_property
    def mul_table(self) -> Tuple[Tuple[int, ...], ...]:
        p, e = self.p, self.e
        rows = []
        for x in self._vectors:
            row = []
            for y in self._vectors:
                if e == 1:
                    row.append((x[0] * y[0]) % p)
                    continue
                prod = _zp_mulmod(_zp_trim(list(x)), _zp_trim(list(y)), self.modulus, p)
                row.append(_vector_to_index(prod + [0] * (e - len(prod)), p))
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def inv_table(self) -> Tuple[Optional[int], ...]:
        # Built with extended Euclid on the modulus; index 0 has no inverse.
        return tuple(None if i == 0 else self._euclid_inverse(i) for i in range(self.q))

    def _euclid_inverse(self, index: int) -> int:
        p, e = self.p, self.e
        if e == 1:
            return pow(index, p - 2, p)
        # Invariant: s_k * x = r_k modulo the modulus
        r0, r1 = list(self.modulus), _zp_trim(list(self._vectors[index]))
        s0, s1 = [], [1]
        while r1:
            quot, rem = _zp_divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _zp_sub(s0, _zp_mul(quot, s1, p), p)
        # r0 is a nonzero constant since the modulus is irreducible
        scale = pow(r0[0], p - 2, p)
        inverse = _zp_mod([(c * scale) % p for c in s0], self.modulus, p)
        return _vector_to_index(inverse + [0] * (e - len(inverse)), p)

    def element(self, value: Union[int, Sequence[int], "FqElem"]) -> "FqElem":
        """Coerce an index, a coefficient vector or an element of this field."""
        if isinstance(value, FqElem):
            if value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FqElem(self, value % self.q if self.e == 1 else _check_index(value, self.q))
        coeffs = list(value)
        if len(coeffs) != self.e:
            raise DegreeMismatch(f"expected {self.e} coefficients, got {len(coeffs)}")
        return FqElem(self, _vector_to_index([c % self.p for c in coeffs], self.p))

    def zero(self) -> "FqElem":
        return FqElem(self, 0)

    def one(self) -> "FqElem":
        return FqElem(self, 1)

    def from_integer(self, n: int) -> "FqElem":
        """Image of the integer n under Z -> F_p -> F_q."""
        return FqElem(self, n % self.p)

    def describe(self) -> str:
        if self.e == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.e}"


def _check_index(index: int, q: int) -> int:
    if not 0 <= index < q:
        raise ValueError(f"element index {index} out of range [0, {q})")
    return index


def _index_to_vector(index: int, p: int, e: int) -> Tuple[int, ...]:
    out = []
    for _ in range(e):
        index, r = divmod(index, p)
        out.append(r)
    return tuple(out)


def _vector_to_index(coeffs: Sequence[int], p: int) -> int:
    index = 0
    for c in reversed(coeffs):
        index = index * p + c
    return index


@dataclass(frozen=True)
class FqElem:
    """An element of F_q, stored by index into the field tables."""

    field: FieldSpec
    index: int

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.field._vectors[self.index]

    @classmethod
    def from_int(cls, field: FieldSpec, index: int) -> "FqElem":
        return cls(field, _check_index(index, field.q))

    def to_int(self) -> int:
        return self.index

    def is_zero(self) -> bool:
        return self.index == 0

    def __bool__(self) -> bool:
        return self.index != 0

    def _same(self, other: "FqElem"):
        if not isinstance(other, FqElem):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch("operands belong to different fields")
        return other

    def __add__(self, other: "FqElem") -> "FqElem":
        other = self._same(other)
        return FqElem(self.field, self.field.add_table[self.index][other.index])

    def __neg__(self) -> "FqElem":
        return FqElem(self.field, self.field.neg_table[self.index])

    def __sub__(self, other: "FqElem") -> "FqElem":
        return self + (-other)

    def __mul__(self, other: "FqElem") -> "FqElem":
        other = self._same(other)
        return FqElem(self.field, self.field.mul_table[self.index][other.index])

    def inverse(self) -> "FqElem":
        if self.index == 0:
            raise DivisionByZero("zero has no inverse in F_q")
        return FqElem(self.field, self.field.inv_table[self.index])

    def __truediv__(self, other: "FqElem") -> "FqElem":
        return self * other.inverse()

    def __pow__(self, n: int) -> "FqElem":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        if self.field.e == 1:
            return f"FqElem({self.index})"
        return f"FqElem({list(self.coeffs)})"


@lru_cache(maxsize=None)
def _cached_field(p: int, e: int, modulus: Optional[Tuple[int, ...]]) -> FieldSpec:
    if not sympy.isprime(p):
        raise NonPrimeP(f"p = {p} is not prime")
    if e < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {e}")

    if modulus is None:
        if e == 1:
            return FieldSpec(p, 1, (0, 1))
        for candidate in _monic_candidates(p, e):
            if _is_irreducible(candidate, p):
                logger.debug("Selected modulus %s for F_%d^%d", candidate, p, e)
                return FieldSpec(p, e, candidate)
        raise ReducibleModulus(f"no irreducible polynomial of degree {e} over F_{p}")

    reduced = tuple(c % p for c in modulus)
    if len(reduced) != e + 1:
        raise DegreeMismatch(f"modulus has degree {len(reduced) - 1}, expected {e}")
    if reduced[-1] != 1:
        raise DegreeMismatch("modulus must be monic")
    if e > 1 and not _is_irreducible(reduced, p):
        raise ReducibleModulus(f"modulus {list(reduced)} is reducible over F_{p}")
    return FieldSpec(p, e, reduced)


def make_field(p: int, e: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """
    Build and validate a finite field.

    Args:
        p: Characteristic (must be prime)
        e: Extension degree (>= 1)
        modulus: Optional monic modulus, coefficients low-to-high. If omitted,
                 the lexicographically smallest monic irreducible of degree e.

    Returns:
        Validated FieldSpec (identical inputs give the same instance)
    """
    return _cached_field(int(p), int(e), None if modulus is None else tuple(int(c) for c in modulus))


def fq_arith(op: str, x: FqElem, y: Union[FqElem, int, None] = None) -> FqElem:
    """Dispatch one of add, neg, mul, inv, int_pow."""
    if op == "add":
        return x + y
    if op == "neg":
        return -x
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inverse()
    if op == "int_pow":
        return x ** int(y)
    raise ValueError(f"unknown field operation {op!r}")


def enumerate_field(field: FieldSpec) -> List[FqElem]:
    """All q elements in index order; the first one is 0."""
    return [FqElem(field, i) for i in range(field.q)]


def power_sum(field: FieldSpec, i: int) -> FqElem:
    """Sum of alpha^i over F_q, with 0^0 = 1."""
    if i < 0:
        raise ValueError("power_sum needs a nonnegative exponent")
    total = field.zero()
    for alpha in enumerate_field(field):
        total = total + (field.one() if i == 0 else alpha ** i)
    return total


# Dense polynomials over F_q: lists of element indices, low-to-high.

Poly = List[int]


def poly_trim(a: Poly) -> Poly:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_add(field: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    add = field.add_table
    n = max(len(a), len(b))
    return poly_trim([add[a[k] if k < len(a) else 0][b[k] if k < len(b) else 0] for k in range(n)])


def poly_scale(field: FieldSpec, a: Sequence[int], c: int) -> Poly:
    row = field.mul_table[c]
    return poly_trim([row[x] for x in a])


def poly_mul(field: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    if not a or not b:
        return []
    add, mul = field.add_table, field.mul_table
    out = [0] * (len(a) + len(b) - 1)
    support = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if x:
            row = mul[x]
            for j, y in support:
                out[i + j] = add[out[i + j]][row[y]]
    return poly_trim(out)


def poly_frobenius(field: FieldSpec, a: Sequence[int]) -> Poly:
    """a^p = sum c_k^p T^{kp} in characteristic p."""
    p = field.p
    out = [0] * ((len(a) - 1) * p + 1) if a else []
    for k, c in enumerate(a):
        if c:
            out[k * p] = (FqElem(field, c) ** p).index
    return poly_trim(out)


def poly_pow(field: FieldSpec, a: Sequence[int], n: int) -> Poly:
    """a^n as the product of Frobenius images a^{p^t} raised to the base-p digits of n."""
    if n < 0:
        raise ValueError("poly_pow needs a nonnegative exponent")
    result, base = [1], poly_trim(list(a))
    while n:
        n, digit = divmod(n, field.p)
        for _ in range(digit):
            result = poly_mul(field, result, base)
        if n:
            base = poly_frobenius(field, base)
    return result


def monic_polynomials(field: FieldSpec, degree: int) -> Iterator[Poly]:
    """All q^degree monic polynomials of the given degree, lower coefficients in index order."""
    for lower in itertools.product(range(field.q), repeat=degree):
        yield list(lower) + [1]


def parse_field_spec(text: str) -> FieldSpec:
    """
    Parse "p^e", "p^e:c0,c1,...,ce" (modulus low-to-high) or a bare prime power "q".

    Raises:
        ParseError: malformed text
        NonPrimeP, ReducibleModulus, DegreeMismatch: from make_field
    """
    raw = (text or "").strip()
    if not raw:
        raise ParseError("field description is empty")
    head, _, modulus_text = raw.partition(":")
    try:
        if "^" in head:
            p_text, e_text = head.split("^", 1)
            p, e = int(p_text), int(e_text)
        else:
            p, e = _split_prime_power(int(head))
        modulus = None
        if modulus_text.strip():
            modulus = [int(c) for c in modulus_text.split(",")]
    except ValueError:
        raise ParseError(f"cannot parse field description {text!r}; expected p^e or p^e:c0,...,ce")
    return make_field(p, e, modulus)


def _split_prime_power(q: int) -> Tuple[int, int]:
    if q < 2:
        raise NonPrimeP(f"q = {q} is not a prime power")
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise NonPrimeP(f"q = {q} is not a prime power")
    (p, e), = factors.items()
    return int(p), int(e)
