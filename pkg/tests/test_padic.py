"""Tests for p-adic digits and binomials mod p."""
import pytest
import sympy
from hypothesis import given, settings as hyp_settings, strategies as st

from models.padic import (
    PadicInt,
    binom_mod_p,
    binomial_row,
    padic_add,
    padic_add_int,
    padic_from_digits,
    padic_from_int,
    padic_neg,
)
from utils.errors import FieldMismatch, InsufficientDigitPrecision


def digit_strings(p, size=6):
    return st.lists(st.integers(min_value=0, max_value=p - 1), min_size=size, max_size=size)


class TestConstruction:
    """Tests for padic_from_int and digit validation."""

    def test_examples(self):
        """Test the listed digit expansions."""
        assert padic_from_int(5, 3, 4).digits == (2, 1, 0, 0)
        assert padic_from_int(-1, 2, 5).digits == (1, 1, 1, 1, 1)
        assert padic_from_int(0, 5, 3).digits == (0, 0, 0)

    def test_value_and_signed_value(self):
        """Test the integer representatives."""
        s = padic_from_int(-3, 5, 2)
        assert s.value() == 22
        assert s.signed_value() == -3
        assert s.prec == 2
        assert s.modulus == 25

    def test_valuation(self):
        """Test v_p(s), with K for zero."""
        assert padic_from_int(12, 2, 6).valuation() == 2
        assert padic_from_int(0, 3, 4).valuation() == 4

    def test_bad_digits(self):
        """Test that digits outside [0, p) are rejected."""
        with pytest.raises(ValueError):
            padic_from_digits([0, 3], 3)
        with pytest.raises(ValueError):
            padic_from_int(1, 3, 0)


class TestAddition:
    """Tests for shifts, sums and negation."""

    def test_add_int_examples(self):
        """Test carries, overflow and the identity shift."""
        assert padic_add_int(padic_from_int(5, 3, 4), 4).digits == (0, 0, 1, 0)
        assert padic_add_int(padic_from_int(-1, 2, 5), 1).digits == (0, 0, 0, 0, 0)
        s = padic_from_int(7, 5, 3)
        assert padic_add_int(s, 0) == s

    def test_neg_examples(self):
        """Test neg(1) = all ones for p = 2 and neg(0) = 0."""
        assert padic_neg(padic_from_int(1, 2, 4)).digits == (1, 1, 1, 1)
        assert padic_neg(padic_from_int(0, 3, 4)).digits == (0, 0, 0, 0)

    @given(digit_strings(3))
    @hyp_settings(max_examples=100, derandomize=True)
    def test_neg_involution(self, digits):
        """Test neg(neg(s)) = s and s + neg(s) = 0."""
        s = padic_from_digits(digits, 3)
        assert padic_neg(padic_neg(s)) == s
        assert padic_add(s, padic_neg(s)).value() == 0
        assert -(-s) == s

    def test_add_mismatch(self):
        """Test that adding p-adic integers for different p is rejected."""
        with pytest.raises(FieldMismatch):
            padic_add(padic_from_int(1, 2, 3), padic_from_int(1, 3, 3))

    def test_add_operator(self):
        """Test s + int and s + t."""
        s = padic_from_int(4, 5, 3)
        assert (s + 3).value() == 7
        assert (s + padic_from_int(122, 5, 3)).value() == 1


class TestBinomials:
    """Tests for binom_mod_p."""

    def test_examples(self):
        """Test the listed binomials."""
        assert binom_mod_p(padic_from_int(-1, 2, 5), 5) == 1
        assert binom_mod_p(padic_from_int(5, 3, 4), 2) == 1
        assert binom_mod_p(padic_from_int(17, 5, 3), 0) == 1

    def test_insufficient_digits(self):
        """Test that p^K <= j fails loudly."""
        with pytest.raises(InsufficientDigitPrecision):
            binom_mod_p(padic_from_int(1, 2, 3), 8)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_matches_exact_binomial(self, p):
        """Test the digit rule against exact integer binomials for 0 <= j <= n <= 50."""
        for n in range(51):
            s = padic_from_int(n, p, 8)
            for j in range(n + 1):
                assert binom_mod_p(s, j) == int(sympy.binomial(n, j) % p)

    def test_row(self):
        """Test binomial_row against binom_mod_p."""
        s = padic_from_int(-7, 3, 6)
        assert binomial_row(s, 10) == tuple(binom_mod_p(s, j) for j in range(10))

    @given(digit_strings(3, 8), st.integers(min_value=0, max_value=26), st.integers(min_value=0, max_value=2))
    @hyp_settings(max_examples=500, derandomize=True)
    def test_locality(self, digits, j, noise):
        """Test that only the low digits covering j matter."""
        s = padic_from_digits(digits, 3)
        changed = list(digits)
        changed[-1] = (changed[-1] + noise) % 3
        changed[-2] = (changed[-2] + 1) % 3
        assert binom_mod_p(s, j) == binom_mod_p(padic_from_digits(changed, 3), j)

    @given(digit_strings(2, 6), digit_strings(2, 6), st.integers(min_value=0, max_value=20))
    @hyp_settings(max_examples=500, derandomize=True)
    def test_vandermonde(self, s_digits, t_digits, j):
        """Test sum_k binom(s, k) binom(t, j-k) = binom(s+t, j) mod 2."""
        s, t = padic_from_digits(s_digits, 2), padic_from_digits(t_digits, 2)
        total = sum(binom_mod_p(s, k) * binom_mod_p(t, j - k) for k in range(j + 1)) % 2
        assert total == binom_mod_p(padic_add(s, t), j)

    def test_padic_int_is_hashable(self):
        """Test that equal digit strings hash alike."""
        assert hash(PadicInt(3, (1, 2))) == hash(padic_from_digits([1, 2], 3))
