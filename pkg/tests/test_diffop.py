"""Tests for the forward difference operator, L and the main identity."""
import pytest

from config import Settings
from controllers.diffop_controller import (
    ASCENDING,
    DESCENDING,
    DiffOpController,
    delta_power,
    forward_delta,
)
from controllers.zeta_controller import ZetaController, inner_bound
from models.field import make_field
from models.laurent import LaurentSeries, ls_make
from models.padic import padic_from_digits, padic_from_int
from utils.errors import BadIndex, InsufficientDigitPrecision, NoConvergence, NotInA
from tests.factories import poly

F2 = make_field(2)
F3 = make_field(3)
F4 = make_field(2, 2)

ACCEPTANCE_ELEMENTS = [(1, 0), (1, 1), (1, 0, 0), (1, 1, 0)]
ACCEPTANCE_EXPONENTS = [0, 1, 2, 5, -1]


def table_function(s, z):
    """An arbitrary function of (s, z) with values in F_3((u))."""
    return ls_make(F3, 0, [(s.value() * j + z * z + j) % 3 for j in range(6)], 6)


def s_int(n, p, digits=32):
    return padic_from_int(n, p, digits)


class TestForwardDifference:
    """Tests for Delta and its powers."""

    def test_constant_is_killed(self):
        """Test Delta c = 0."""
        c = ls_make(F3, 0, [1, 2, 0, 1], 4)
        assert forward_delta(lambda s, z: c, s_int(4, 3), 2).is_zero

    def test_linear_in_z(self):
        """Test Delta (z c) = c."""
        c = ls_make(F3, 0, [2, 1, 1, 0], 4)
        f = lambda s, z: c.scale_int(z)
        assert forward_delta(f, s_int(1, 3), 5) == c

    def test_power_matches_iteration(self):
        """Test Delta^h against h nested applications of Delta."""
        s = s_int(7, 3)
        iterated = table_function
        for h in range(4):
            assert delta_power(table_function, s, 1, h) == iterated(s, 1)
            iterated = (lambda g: lambda t, z: forward_delta(g, t, z))(iterated)

    def test_negative_order(self):
        """Test that a negative difference order is rejected."""
        with pytest.raises(BadIndex):
            delta_power(table_function, s_int(0, 3), 0, -1)

    def test_shift_pow_expansion(self, diffop, rng):
        """Test (1 + Delta)^i f = sum_h binom(i, h) Delta^h f = f(s+i, z+i)."""
        for i in range(5):
            s = padic_from_digits([rng.randrange(3) for _ in range(8)], 3)
            z = rng.randrange(-3, 4)
            direct = diffop.shift_pow(table_function, s, z, i)
            assert direct == diffop.shift_pow(table_function, s, z, i, expanded=True)
            assert direct == table_function(s + i, z + i)

    def test_shift_pow_range(self, diffop):
        """Test that i outside [0, i_cap] is rejected."""
        with pytest.raises(BadIndex):
            diffop.shift_pow(table_function, s_int(0, 3), 0, -1)
        with pytest.raises(BadIndex):
            diffop.shift_pow(table_function, s_int(0, 3), 0, diffop.settings.i_cap + 1)


class TestCorrectionTerm:
    """Tests for the i-th correction term of L."""

    def test_i_star(self):
        """Test the least multiple of q-1 with (m+1) i >= N."""
        assert DiffOpController.i_star(2, 1, 16) == 8
        assert DiffOpController.i_star(3, 1, 16) == 8
        assert DiffOpController.i_star(4, 2, 20) == 9
        assert DiffOpController.i_star(3, 2, 1) == 2

    def test_vanishing_binomial(self, diffop):
        """Test that binom(-0, i) = 0 gives a zero term."""
        term = diffop.correction_term(poly(F2, 1, 0), s_int(0, 2), 1, 16)
        assert term.is_zero
        assert term.prec == 16

    def test_first_term_over_f2(self, diffop):
        """Test a = T, s = 1, i = 1 over F_2 starts at u^4."""
        term = diffop.correction_term(poly(F2, 1, 0), s_int(1, 2), 1, 16)
        assert term.val == 4
        assert term.prec == 16

    def test_valuation_lower_bound(self, diffop, rng):
        """Test v_inf(term i) >= (m+1) i in the proof convention."""
        for coeffs in [(1, 2), (1, 1, 0)]:
            a = poly(F3, *coeffs)
            m = len(coeffs) - 1
            for i in (2, 4, 6):
                s = padic_from_digits([rng.randrange(3) for _ in range(12)], 3)
                term = diffop.correction_term(a, s, i, 18)
                assert term.is_zero or term.val >= (m + 1) * i

    def test_bad_index(self, diffop):
        """Test that i must be a positive multiple of q-1."""
        a = poly(F3, 1, 0)
        with pytest.raises(BadIndex):
            diffop.correction_term(a, s_int(1, 3), 1, 12)
        with pytest.raises(BadIndex):
            diffop.correction_term(a, s_int(1, 3), 0, 12)

    def test_not_in_a(self, diffop):
        """Test that constants are rejected."""
        with pytest.raises(NotInA):
            diffop.correction_term(LaurentSeries.one(F2, 8), s_int(1, 2), 1, 8)


class TestApplyL:
    """Tests for L zeta and the neighbour sum."""

    def test_rhs_examples(self, diffop):
        """Test 1/<T> + 1/<T+1> over F_2 and sum 1/<T+alpha> = 2u^2 + 2u^4 + ... over F_3."""
        assert diffop.rhs_neighbors(poly(F2, 1, 0), s_int(1, 2), 16) == ls_make(F2, 1, [1] * 15, 16)
        assert diffop.rhs_neighbors(poly(F3, 1, 0), s_int(1, 3), 10) == ls_make(F3, 2, [2, 0] * 4, 10)

    def test_zero_exponent(self, diffop):
        """Test that both sides vanish at s = 0."""
        a = poly(F3, 1, 1)
        assert diffop.apply_L(a, s_int(0, 3), 12).is_zero
        assert diffop.rhs_neighbors(a, s_int(0, 3), 12).is_zero

    def test_matches_neighbors_over_f2(self, diffop):
        """Test L zeta(1, T, 0) = u + u^2 + ... over F_2."""
        result = diffop.apply_L(poly(F2, 1, 0), s_int(1, 2), 16)
        assert result == ls_make(F2, 1, [1] * 15, 16)

    def test_summation_order(self, diffop):
        """Test that ascending and descending summation agree."""
        a, s = poly(F3, 1, 2), s_int(-4, 3)
        ascending = diffop.apply_L(a, s, 14, order=ASCENDING)
        assert ascending == diffop.apply_L(a, s, 14, order=DESCENDING)

    def test_extra_terms_change_nothing(self, diffop):
        """Test that terms past i* are O(u^N)."""
        a, s = poly(F2, 1, 1, 0), s_int(5, 2)
        assert diffop.apply_L(a, s, 14, extra_terms=2) == diffop.apply_L(a, s, 14)

    def test_extra_level_and_term_change_nothing(self, diffop):
        """Test that one more level and one more i past l* and i* are O(u^N)."""
        a, s = poly(F3, 1, 0), s_int(2, 3)
        assert diffop.apply_L(a, s, 12, extra_terms=1, extra_levels=1) == diffop.apply_L(a, s, 12)

    def test_workers_are_deterministic(self):
        """Test that pooled correction terms match the serial ones."""
        a, s = poly(F3, 1, 0), s_int(2, 3)
        serial = DiffOpController(Settings()).apply_L(a, s, 12)
        pooled = DiffOpController(Settings(workers=2)).apply_L(a, s, 12)
        assert serial == pooled

    def test_insufficient_digits(self, diffop):
        """Test that two digits of s cannot resolve binom(-s, 8)."""
        with pytest.raises(InsufficientDigitPrecision):
            diffop.apply_L(poly(F2, 1, 0), padic_from_int(1, 2, 2), 16)

    def test_i_cap(self):
        """Test that i* beyond i_cap fails."""
        with pytest.raises(NoConvergence):
            DiffOpController(Settings(i_cap=4)).apply_L(poly(F2, 1, 0), s_int(1, 2), 16)

    def test_rhs_not_in_a(self, diffop):
        """Test that rhs_neighbors rejects 1 + 1/T."""
        with pytest.raises(NotInA):
            diffop.rhs_neighbors(ls_make(F2, 0, [1, 1, 0, 0], 4), s_int(1, 2))


class TestVerifyMain:
    """Tests for the main identity check."""

    @pytest.mark.parametrize("field,coeffs,n,prec", [
        (F2, (1, 0), 1, 16),
        (F3, (1, 0, 0), 2, 16),
        (F3, (1, 1), 5, 16),
        (F4, (1, 2), -1, 12),
    ])
    def test_examples(self, diffop, field, coeffs, n, prec):
        """Test a match on representative inputs."""
        report = diffop.verify_main(poly(field, *coeffs), s_int(n, field.p), prec)
        assert report.matched
        assert report.matched_prec == prec

    def test_report_contents(self, diffop):
        """Test the i* and l* tables for q = 2, a = T, N = 16."""
        report = diffop.verify_main(poly(F2, 1, 0), s_int(1, 2), 16)
        assert report.i_star == 8
        assert sorted(report.term_valuations) == list(range(1, 9))
        assert report.l_star == 5
        assert report.l_bounds[5] == 21
        data = report.to_dict()
        assert data["verdict"] == "match"
        assert data["first_difference"] is None

    def test_definition_convention_reports(self, diffop):
        """Test that the definition convention runs and is labelled as such."""
        report = diffop.verify_main(poly(F2, 1, 0), s_int(1, 2), 10, sign="definition")
        assert report.zeta_sign == "definition"
        assert any("not asserted" in note for note in report.notes)
        assert report.verdict in ("match", "mismatch")

    def test_shared_cache(self):
        """Test that the controllers share one inner-sum cache."""
        zeta = ZetaController(Settings())
        diffop = DiffOpController(Settings(), zeta)
        diffop.verify_main(poly(F2, 1, 0), s_int(1, 2), 12)
        assert zeta._inner_cache

    @pytest.mark.slow
    @pytest.mark.parametrize("field", [F2, F3, F4])
    @pytest.mark.parametrize("coeffs", ACCEPTANCE_ELEMENTS)
    def test_acceptance_grid(self, diffop, rng, field, coeffs):
        """Test the identity and both valuation bounds at N = 20 for s in {0, 1, 2, 5, -1} and one random s."""
        a = poly(field, *coeffs)
        q, m = field.q, len(coeffs) - 1
        exponents = [s_int(n, field.p) for n in ACCEPTANCE_EXPONENTS]
        exponents.append(padic_from_digits([rng.randrange(field.p) for _ in range(32)], field.p))
        for s in exponents:
            report = diffop.verify_main(a, s, 20)
            assert report.matched, f"first difference at u^{report.first_difference} for s = {s.digits}"
            for i, val in report.term_valuations.items():
                assert val is None or val >= (m + 1) * i
            for l in range(report.l_star + 1):
                inner = diffop.zeta.inner_sum(a, s, l, prec=20)
                assert inner.is_zero or inner.val >= inner_bound(q, m, l)


class TestTelescoping:
    """Tests for one step of the level recursion."""

    @pytest.mark.parametrize("field,coeffs,n,l,prec", [
        (F2, (1, 0), 1, 0, 12),
        (F3, (1, 1), 2, 0, 12),
        (F3, (1, 0), 4, 1, 14),
        (F2, (1, 1, 0), 3, 1, 14),
    ])
    def test_step_matches(self, diffop, field, coeffs, n, l, prec):
        """Test S_{l+1}(s) = -sum_i binom(-s, i) u^{(m+l+1) i} S_l(s+i)."""
        report = diffop.telescoping_step(poly(field, *coeffs), s_int(n, field.p), l, prec)
        assert report.label == "telescope"
        assert report.matched

    def test_insufficient_digits(self, diffop):
        """Test that one digit of s cannot reach i = 5."""
        with pytest.raises(InsufficientDigitPrecision):
            diffop.telescoping_step(poly(F2, 1, 0), padic_from_int(1, 2, 1), 0, 12)
