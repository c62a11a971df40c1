"""Tests for finite field arithmetic and polynomials over F_q."""
import itertools

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from models.field import (
    FqElem,
    enumerate_field,
    fq_arith,
    make_field,
    monic_polynomials,
    parse_field_spec,
    poly_add,
    poly_mul,
    poly_pow,
    power_sum,
)
from utils.errors import DegreeMismatch, DivisionByZero, NonPrimeP, ParseError, ReducibleModulus


class TestMakeField:
    """Tests for field construction and validation."""

    def test_prime_field(self, f2):
        """Test that F_2 has the placeholder modulus x - 0."""
        assert f2.q == 2
        assert f2.modulus == (0, 1)

    def test_f4_default_modulus(self, f4):
        """Test that F_4 picks x^2 + x + 1."""
        assert f4.modulus == (1, 1, 1)
        assert f4.q == 4

    def test_smallest_irreducible_moduli(self, f8, f9):
        """Test the lexicographically smallest monic irreducible moduli of F_8 and F_9."""
        assert f8.modulus == (1, 0, 1, 1)
        assert f9.modulus == (1, 0, 1)

    def test_explicit_modulus(self):
        """Test that an explicit irreducible modulus is accepted."""
        field = make_field(2, 2, [1, 1, 1])
        assert field == make_field(2, 2)

    def test_reducible_modulus(self):
        """Test that x^2 + 1 = (x+1)^2 over F_2 is rejected."""
        with pytest.raises(ReducibleModulus):
            make_field(2, 2, [1, 0, 1])

    def test_non_prime(self):
        """Test that a composite characteristic is rejected."""
        with pytest.raises(NonPrimeP):
            make_field(4)

    def test_degree_mismatch(self):
        """Test that a modulus of the wrong degree is rejected."""
        with pytest.raises(DegreeMismatch):
            make_field(2, 2, [1, 1])

    def test_non_monic_modulus(self):
        """Test that a non-monic modulus is rejected."""
        with pytest.raises(DegreeMismatch):
            make_field(3, 2, [1, 0, 2])

    def test_deterministic(self):
        """Test that identical inputs give the same field."""
        assert make_field(3, 2) is make_field(3, 2)


class TestArithmetic:
    """Tests for fq_arith and the element operators."""

    def test_prime_field_products(self, f3):
        """Test 2 * 2 = 1 and inv(2) = 2 in F_3."""
        two = f3.element(2)
        assert fq_arith("mul", two, two) == f3.one()
        assert fq_arith("inv", two) == two

    def test_f4_reduction(self, f4):
        """Test x * x = x + 1 in F_4."""
        x = f4.element([0, 1])
        assert fq_arith("mul", x, x) == f4.element([1, 1])

    def test_negative_power(self, f5):
        """Test that negative exponents go through the inverse."""
        three = f5.element(3)
        assert fq_arith("int_pow", three, -1) == three.inverse()
        assert three ** -2 * three ** 2 == f5.one()

    def test_zero_inverse(self, f9):
        """Test that inverting zero raises DivisionByZero."""
        with pytest.raises(DivisionByZero):
            f9.zero().inverse()

    def test_division_by_zero_is_zero_division(self, f3):
        """Test that DivisionByZero is also a ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            f3.one() / f3.zero()

    @pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
    def test_axioms_exhaustive(self, shape):
        """Test commutativity, associativity and distributivity on all triples."""
        field = make_field(*shape)
        elements = enumerate_field(field)
        for x, y, z in itertools.product(elements, repeat=3):
            assert x + y == y + x
            assert x * y == y * x
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z

    @pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (13, 1)])
    def test_inverse_exhaustive(self, shape):
        """Test inv(x) * x = 1 for every nonzero x with q <= 16."""
        field = make_field(*shape)
        for x in enumerate_field(field)[1:]:
            assert x.inverse() * x == field.one()

    @given(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=8))
    @hyp_settings(max_examples=60, derandomize=True)
    def test_index_round_trip(self, a, b):
        """Test that from_int / to_int and subtraction agree in F_9."""
        field = make_field(3, 2)
        x, y = FqElem.from_int(field, a), FqElem.from_int(field, b)
        assert x.to_int() == a
        assert (x - y) + y == x


class TestEnumerationAndPowerSums:
    """Tests for enumerate_field and power_sum."""

    def test_enumerate_small(self, f2, f3):
        """Test the fixed element order."""
        assert [e.to_int() for e in enumerate_field(f2)] == [0, 1]
        assert [e.to_int() for e in enumerate_field(f3)] == [0, 1, 2]

    def test_enumerate_f4_distinct(self, f4):
        """Test that F_4 enumerates four distinct elements starting with zero."""
        elements = enumerate_field(f4)
        assert len(set(elements)) == 4
        assert elements[0].is_zero()

    def test_power_sum_examples(self, f2, f3):
        """Test the listed character sums."""
        assert power_sum(f3, 2) == f3.element(2)
        assert power_sum(f3, 1) == f3.zero()
        assert power_sum(f2, 3) == f2.one()

    @pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
    def test_power_sum_rule(self, shape):
        """Test sum alpha^i = -1 iff i >= 1 and (q-1) | i, else 0."""
        field = make_field(*shape)
        minus_one = -field.one()
        for i in range(3 * (field.q - 1) + 1):
            expected = minus_one if i >= 1 and i % (field.q - 1) == 0 else field.zero()
            assert power_sum(field, i) == expected


class TestPolynomials:
    """Tests for dense polynomials over F_q."""

    def test_monic_count(self, f3):
        """Test that there are q^d monic polynomials of degree d."""
        polys = list(monic_polynomials(f3, 2))
        assert len(polys) == 9
        assert all(p[-1] == 1 and len(p) == 3 for p in polys)

    def test_frobenius_power(self, f2):
        """Test (T + 1)^4 = T^4 + 1 over F_2."""
        assert poly_pow(f2, [1, 1], 4) == [1, 0, 0, 0, 1]

    def test_pow_matches_repeated_multiplication(self, f9):
        """Test that the digit-wise power agrees with repeated products."""
        a = [2, 5, 1]
        expected = [1]
        for n in range(12):
            assert poly_pow(f9, a, n) == expected
            expected = poly_mul(f9, expected, a)

    def test_add_cancels(self, f3):
        """Test that a + 2a = 0 over F_3."""
        a = [1, 2, 1]
        assert poly_add(f3, a, poly_add(f3, a, a)) == []


class TestParseFieldSpec:
    """Tests for the textual field description."""

    def test_prime_power_forms(self):
        """Test p^e, bare q and explicit modulus forms."""
        assert parse_field_spec("2^2") == make_field(2, 2)
        assert parse_field_spec("9") == make_field(3, 2)
        assert parse_field_spec("2^2:1,1,1") == make_field(2, 2)
        assert parse_field_spec("5") == make_field(5)

    def test_malformed(self):
        """Test that garbage raises ParseError."""
        with pytest.raises(ParseError):
            parse_field_spec("two")
        with pytest.raises(ParseError):
            parse_field_spec("")

    def test_not_prime_power(self):
        """Test that 6 is rejected."""
        with pytest.raises(NonPrimeP):
            parse_field_spec("6")
