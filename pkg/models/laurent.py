"""Precision-tracked elements of k_inf = F_q((1/T)) in the variable u = 1/T.

A series stores the coefficients c_val, ..., c_{prec-1} and is known modulo O(u^prec).
Exponent j of u is T^{-j}, so v_inf(a) = val and a polynomial of degree m in T has val = -m.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from models.field import FieldSpec, FqElem
from utils.errors import BadPrecision, DivisionByZero, FieldMismatch, ZeroInput

Coefficient = Union[int, Sequence[int], FqElem]


@dataclass(frozen=True)
class LaurentSeries:
    """
    Element of F_q((u)) modulo O(u^prec).

    Attributes:
        field: The coefficient field
        val: Lowest tracked exponent; for a zero series this equals prec
        indices: Field-element indices of c_val ... c_{prec-1}
        prec: Absolute precision N
    """

    field: FieldSpec
    val: int
    indices: Tuple[int, ...]
    prec: int

    # Construction

    @classmethod
    def _normalized(cls, field: FieldSpec, val: int, indices: Sequence[int], prec: int) -> "LaurentSeries":
        lead = 0
        while lead < len(indices) and indices[lead] == 0:
            lead += 1
        if lead == len(indices):
            return cls(field, prec, (), prec)
        return cls(field, val + lead, tuple(indices[lead:]), prec)

    @classmethod
    def zero(cls, field: FieldSpec, prec: int) -> "LaurentSeries":
        return cls(field, prec, (), prec)

    @classmethod
    def one(cls, field: FieldSpec, prec: int) -> "LaurentSeries":
        if prec <= 0:
            raise BadPrecision(f"the constant 1 needs precision > 0, got {prec}")
        return cls(field, 0, (1,) + (0,) * (prec - 1), prec)

    @classmethod
    def monomial(cls, field: FieldSpec, coefficient: Coefficient, exponent: int, prec: int) -> "LaurentSeries":
        """c * u^exponent to precision prec."""
        if exponent >= prec:
            raise BadPrecision(f"exponent {exponent} is not below precision {prec}")
        c = field.element(coefficient).index
        return cls._normalized(field, exponent, (c,) + (0,) * (prec - exponent - 1), prec)

    @classmethod
    def from_poly(cls, field: FieldSpec, coeffs_in_t: Sequence[Coefficient], prec: int) -> "LaurentSeries":
        """A polynomial c_0 + c_1 T + ... + c_d T^d, exact below u^prec."""
        indices = [field.element(c).index for c in coeffs_in_t]
        while indices and indices[-1] == 0:
            indices.pop()
        if not indices:
            return cls.zero(field, prec)
        degree = len(indices) - 1
        if -degree >= prec:
            raise BadPrecision(f"precision {prec} must exceed {-degree}")
        body = list(reversed(indices)) + [0] * (prec - 1)
        return cls._normalized(field, -degree, body[:prec + degree], prec)

    # Basic queries

    @property
    def is_zero(self) -> bool:
        return not self.indices

    @property
    def coeffs(self) -> Tuple[FqElem, ...]:
        return tuple(FqElem(self.field, c) for c in self.indices)

    def coefficient(self, j: int) -> FqElem:
        """Coefficient of u^j."""
        if j >= self.prec:
            raise BadPrecision(f"coefficient of u^{j} is not known below O(u^{self.prec})")
        if j < self.val:
            return self.field.zero()
        return FqElem(self.field, self.indices[j - self.val])

    def _index_at(self, j: int) -> int:
        k = j - self.val
        return self.indices[k] if 0 <= k < len(self.indices) else 0

    def is_one_unit(self) -> bool:
        return not self.is_zero and self.val == 0 and self.indices[0] == 1

    def truncate(self, prec: int) -> "LaurentSeries":
        """Forget everything from u^prec on."""
        if prec > self.prec:
            raise BadPrecision(f"cannot raise precision from {self.prec} to {prec}")
        if self.is_zero or self.val >= prec:
            return LaurentSeries.zero(self.field, prec)
        return LaurentSeries._normalized(self.field, self.val, self.indices[:prec - self.val], prec)

    def equals_to(self, other: "LaurentSeries") -> bool:
        """True when every coefficient below the smaller precision agrees."""
        return self.first_difference(other) is None

    def first_difference(self, other: "LaurentSeries") -> Optional[int]:
        """Lowest exponent below the common precision where the two series differ."""
        self._check_field(other)
        top = min(self.prec, other.prec)
        low = min(self.val, other.val)
        for j in range(low, top):
            if self._index_at(j) != other._index_at(j):
                return j
        return None

    def _check_field(self, other: "LaurentSeries"):
        if not isinstance(other, LaurentSeries):
            raise TypeError(f"expected LaurentSeries, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch("series have different coefficient fields")

    # Ring operations

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check_field(other)
        prec = min(self.prec, other.prec)
        low = min(self.val, other.val)
        if low >= prec:
            return LaurentSeries.zero(self.field, prec)
        add = self.field.add_table
        out = [add[self._index_at(j)][other._index_at(j)] for j in range(low, prec)]
        return LaurentSeries._normalized(self.field, low, out, prec)

    def __neg__(self) -> "LaurentSeries":
        neg = self.field.neg_table
        return LaurentSeries(self.field, self.val, tuple(neg[c] for c in self.indices), self.prec)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check_field(other)
        prec = min(self.prec + other.val, other.prec + self.val)
        if self.is_zero or other.is_zero:
            return LaurentSeries.zero(self.field, prec)
        low = self.val + other.val
        width = prec - low
        if width <= 0:
            return LaurentSeries.zero(self.field, prec)
        add, mul = self.field.add_table, self.field.mul_table
        out = [0] * width
        b = other.indices
        nb = min(len(b), width)
        for i, x in enumerate(self.indices[:width]):
            if x:
                row = mul[x]
                for j in range(min(nb, width - i)):
                    y = b[j]
                    if y:
                        out[i + j] = add[out[i + j]][row[y]]
        return LaurentSeries._normalized(self.field, low, out, prec)

    def invert(self) -> "LaurentSeries":
        """Multiplicative inverse; val flips sign and relative precision is kept."""
        if self.is_zero:
            raise DivisionByZero("cannot invert a series that is zero to its precision")
        width = self.prec - self.val
        a = self.indices
        add, mul, neg = self.field.add_table, self.field.mul_table, self.field.neg_table
        lead_inv = self.field.inv_table[a[0]]
        minus_lead_inv = neg[lead_inv]
        b = [lead_inv] + [0] * (width - 1)
        for k in range(1, width):
            acc = 0
            for j in range(1, min(k, len(a) - 1) + 1):
                if a[j] and b[k - j]:
                    acc = add[acc][mul[a[j]][b[k - j]]]
            b[k] = mul[minus_lead_inv][acc]
        return LaurentSeries._normalized(self.field, -self.val, b, width - self.val)

    def __truediv__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self * other.invert()

    def shift(self, k: int) -> "LaurentSeries":
        """Exact multiplication by the monomial u^k."""
        return LaurentSeries(self.field, self.val + k, self.indices, self.prec + k)

    def scale(self, c: Coefficient) -> "LaurentSeries":
        """Multiplication by a constant of F_q."""
        index = self.field.element(c).index
        row = self.field.mul_table[index]
        return LaurentSeries._normalized(self.field, self.val, [row[x] for x in self.indices], self.prec)

    def scale_int(self, n: int) -> "LaurentSeries":
        """Multiplication by the integer n, read in the prime subfield."""
        return self.scale(self.field.from_integer(n))

    def frobenius(self) -> "LaurentSeries":
        """The p-th power; exact in characteristic p, so precision multiplies by p."""
        p = self.field.p
        if self.is_zero:
            return LaurentSeries.zero(self.field, self.prec * p)
        power = [FqElem(self.field, c) ** p for c in range(self.field.q)]
        width = (self.prec - self.val) * p
        out = [0] * width
        for k, c in enumerate(self.indices):
            out[k * p] = power[c].index
        return LaurentSeries._normalized(self.field, self.val * p, out, self.prec * p)

    def int_pow(self, n: int) -> "LaurentSeries":
        """Integer power by repeated squaring; negative n goes through invert."""
        if n < 0:
            return self.invert().int_pow(-n)
        if n == 0:
            if self.is_zero:
                raise ZeroInput("0^0 of a series that is zero to its precision")
            return LaurentSeries.one(self.field, self.prec - self.val)
        result, base = None, self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __pow__(self, n: int) -> "LaurentSeries":
        return self.int_pow(n)

    def __repr__(self) -> str:
        return f"LaurentSeries(val={self.val}, prec={self.prec}, indices={list(self.indices)})"


def ls_make(field: FieldSpec, v: int, coeffs: Sequence[Coefficient], n: int) -> LaurentSeries:
    """
    Build a series c_v u^v + ... + c_{n-1} u^{n-1} + O(u^n).

    Raises:
        BadPrecision: when v >= n or the coefficient count is not n - v
    """
    if v >= n:
        raise BadPrecision(f"lowest exponent {v} must be below precision {n}")
    if len(coeffs) != n - v:
        raise BadPrecision(f"expected {n - v} coefficients, got {len(coeffs)}")
    return LaurentSeries._normalized(field, v, [field.element(c).index for c in coeffs], n)


def ls_arith(op: str, x: LaurentSeries, y: Optional[LaurentSeries] = None) -> LaurentSeries:
    """Dispatch one of add, mul, invert."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "invert":
        return x.invert()
    raise ValueError(f"unknown series operation {op!r}")


def sgn_and_val(a: LaurentSeries) -> Tuple[FqElem, int]:
    """(sgn_inf(a), v_inf(a)): the leading coefficient and the valuation."""
    if a.is_zero:
        raise ZeroInput("sgn and v_inf are undefined for zero")
    return FqElem(a.field, a.indices[0]), a.val


def one_unit_part(a: LaurentSeries) -> LaurentSeries:
    """<a> = a / (sgn(a) u^{v(a)}), a 1-unit with precision prec - val."""
    sign, v = sgn_and_val(a)
    return a.scale(sign.inverse()).shift(-v)


def omega_part(a: LaurentSeries) -> LaurentSeries:
    """omega(a) = sgn(a) T^{-v(a)}, carried at the precision of a."""
    sign, v = sgn_and_val(a)
    return LaurentSeries.monomial(a.field, sign, v, a.prec)


def is_monic_polynomial(a: LaurentSeries) -> bool:
    """Leading coefficient 1, val <= 0 and no tracked negative powers of T."""
    if a.is_zero or a.val > 0 or a.indices[0] != 1:
        return False
    return all(c == 0 for c in a.indices[1 - a.val:])
