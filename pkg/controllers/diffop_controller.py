"""Controller for the forward difference operator, the operator L and the main identity check."""
import logging
from math import comb
from typing import Callable, Dict, List, Optional

from config import Settings
from controllers.zeta_controller import SIGN_FACTORS, ZetaController, inner_bound
from models.hurwitz_params import HurwitzParams
from models.laurent import LaurentSeries, one_unit_part
from models.padic import PadicInt, binom_mod_p, padic_add_int, padic_neg
from models.verification_report import VerificationReport
from utils.errors import BadIndex, InsufficientDigitPrecision, NoConvergence, NotInA
from utils.exponentiation import unit_pow
from utils.helpers import ordered_map, sum_series

logger = logging.getLogger(__name__)

SeriesFunction = Callable[[PadicInt, int], LaurentSeries]

ASCENDING = "ascending"
DESCENDING = "descending"


def forward_delta(f: SeriesFunction, s: PadicInt, z: int) -> LaurentSeries:
    """Delta_(s,z) f = f(s+1, z+1) - f(s, z)."""
    return f(padic_add_int(s, 1), z + 1) - f(s, z)


def delta_power(f: SeriesFunction, s: PadicInt, z: int, h: int) -> LaurentSeries:
    """Delta^h f(s, z) = sum_j (-1)^j binom(h, j) f(s+h-j, z+h-j)."""
    if h < 0:
        raise BadIndex(f"difference order must be nonnegative, got {h}")
    terms = []
    for j in range(h + 1):
        value = f(padic_add_int(s, h - j), z + h - j)
        terms.append(value.scale_int((-1) ** j * comb(h, j)))
    total = terms[0]
    for term in terms[1:]:
        total = total + term
    return total


class DiffOpController:
    def __init__(self, settings: Optional[Settings] = None, zeta: Optional[ZetaController] = None):
        """
        Initialize the difference-operator controller.

        Args:
            settings: Settings instance
            zeta: ZetaController whose inner-sum cache is shared (created if omitted)
        """
        self.settings = settings or Settings()
        self.zeta = zeta or ZetaController(self.settings)

    def shift_pow(self, f: SeriesFunction, s: PadicInt, z: int, i: int, expanded: bool = False) -> LaurentSeries:
        """
        (1 + Delta_(s,z))^i f(s, z).

        Direct evaluation is f(s+i, z+i); the expanded form is sum_h binom(i, h) Delta^h f(s, z)
        with the integer binomials reduced mod p.
        """
        if i < 0 or i > self.settings.i_cap:
            raise BadIndex(f"shift exponent must lie in [0, {self.settings.i_cap}], got {i}")
        if not expanded:
            return f(padic_add_int(s, i), z + i)
        total = None
        for h in range(i + 1):
            term = delta_power(f, s, z, h).scale_int(comb(i, h))
            total = term if total is None else total + term
        return total

    @staticmethod
    def i_star(q: int, m: int, prec: int) -> int:
        """Least multiple i of q-1 with (m+1) i >= prec."""
        step = q - 1
        count = -(-prec // ((m + 1) * step))
        return max(1, count) * step

    def correction_term(self, a: LaurentSeries, s: PadicInt, i: int, prec: int,
                        sign: Optional[str] = None) -> LaurentSeries:
        """
        binom(-s, i) sum_l s0^{sigma (m+l+1) i} inner_sum(a, s+i, l) with s0 = 1/T.

        The l-sum stops once (q-1)(2m+l)(l+1)/2 + (m+l+1) i reaches prec; the index set is the
        same for both sign conventions.

        Args:
            a: Element with v_inf(a) < 0
            s: Exponent
            i: Positive multiple of q-1
            prec: Target precision N
            sign: "proof" (default from settings) or "definition"

        Returns:
            The i-th correction term; in the proof convention its valuation is at least (m+1) i
        """
        if a.is_zero or a.val >= 0:
            raise NotInA(f"|a|_inf must exceed 1, but v_inf(a) = {a.val}")
        field = a.field
        q, m = field.q, -a.val
        if i < 1 or i % (q - 1):
            raise BadIndex(f"correction index must be a positive multiple of {q - 1}, got {i}")
        sigma = SIGN_FACTORS[sign or self.settings.zeta_sign]

        c = binom_mod_p(padic_neg(s), i)
        if not c:
            return LaurentSeries.zero(field, prec)

        shifted = padic_add_int(s, i)
        terms = []
        l = 0
        while inner_bound(q, m, l) + (m + l + 1) * i < prec:
            k = (m + l + 1) * i
            if sigma > 0:
                terms.append(self.zeta.inner_sum(a, shifted, l, prec=prec - k).shift(k))
            else:
                terms.append(self.zeta.inner_sum(a, shifted, l, prec=prec + k).shift(-k))
            l += 1
        logger.debug("correction_term: i = %d uses levels 0..%d", i, l - 1)
        return sum_series(terms, field, prec).scale_int(c)

    def apply_L(self, a: LaurentSeries, s: PadicInt, prec: int, sign: Optional[str] = None,
                order: str = ASCENDING, extra_terms: int = 0, extra_levels: int = 0) -> LaurentSeries:
        """
        L zeta at (s, z = 0): the zeta term plus the correction terms for i = q-1, ..., i*.

        Args:
            a: Element with v_inf(a) < 0
            s: Exponent; its digit precision must cover i*
            prec: Target precision N
            sign: Damping convention for the correction terms
            order: Summation order of the correction terms, ascending or descending in i
            extra_terms: Additional multiples of q-1 computed past i*
            extra_levels: Additional levels of the zeta term computed past l*

        Returns:
            L applied to the zeta term, to precision prec
        """
        terms = self._correction_terms(a, s, prec, sign, extra_terms)
        base = self._zeta_term(a, s, prec, extra_levels)
        indices = sorted(terms, reverse=(order == DESCENDING))
        return sum_series([base] + [terms[i] for i in indices], a.field, prec)

    def _zeta_term(self, a: LaurentSeries, s: PadicInt, prec: int, extra_levels: int = 0) -> LaurentSeries:
        u = LaurentSeries.monomial(a.field, 1, 1, prec + 1)
        return self.zeta.hurwitz_goss(u, s, HurwitzParams(a, 0, prec), extra_levels=extra_levels)

    def _correction_terms(self, a: LaurentSeries, s: PadicInt, prec: int, sign: Optional[str],
                          extra_terms: int = 0) -> Dict[int, LaurentSeries]:
        if a.is_zero or a.val >= 0:
            raise NotInA(f"|a|_inf must exceed 1, but v_inf(a) = {a.val}")
        q, m = a.field.q, -a.val
        top = self.i_star(q, m, prec) + extra_terms * (q - 1)
        if top > self.settings.i_cap:
            raise NoConvergence(f"i* = {top} exceeds i_cap = {self.settings.i_cap}")
        if s.modulus <= top:
            raise InsufficientDigitPrecision(
                f"{s.prec} digits of s cannot resolve binom(-s, i) up to i = {top}")
        indices = list(range(q - 1, top + 1, q - 1))
        values = ordered_map(lambda i: self.correction_term(a, s, i, prec, sign), indices,
                             self.settings.workers)
        return dict(zip(indices, values))

    def rhs_neighbors(self, a: LaurentSeries, s: PadicInt, prec: Optional[int] = None) -> LaurentSeries:
        """
        sum over alpha in F_q of <a + alpha>^{-s}.

        Args:
            a: Element with v_inf(a) < 0
            s: Exponent
            prec: Optional precision to truncate to
        """
        if a.is_zero or a.val >= 0:
            raise NotInA(f"|a|_inf must exceed 1, but v_inf(a) = {a.val}")
        field = a.field
        neg_s = padic_neg(s)
        terms = []
        for alpha in range(field.q):
            shifted = a if alpha == 0 else a + LaurentSeries.monomial(field, alpha, 0, a.prec)
            unit = one_unit_part(shifted)
            if prec is not None and prec < unit.prec:
                unit = unit.truncate(prec)
            terms.append(unit_pow(unit, neg_s, self.settings.pow_method))
        total = sum_series(terms, field, terms[0].prec)
        if prec is not None and prec < total.prec:
            total = total.truncate(prec)
        return total

    def verify_main(self, a: LaurentSeries, s: PadicInt, prec: int,
                    sign: Optional[str] = None) -> VerificationReport:
        """
        Compare L zeta(s, a, 0) against the neighbour sum of <a + alpha>^{-s}.

        Both sides are computed independently; the report carries the per-i valuation table
        of the correction terms and the per-l bound table of the zeta term.
        """
        sign = sign or self.settings.zeta_sign
        terms = self._correction_terms(a, s, prec, sign)
        q, m = a.field.q, -a.val
        base = self._zeta_term(a, s, prec)
        lhs = sum_series([base] + [terms[i] for i in sorted(terms)], a.field, prec)
        rhs = self.rhs_neighbors(a, s, prec)
        l_top, bounds = self.zeta.l_star(q, m, 0, 1, prec)

        notes: List[str] = []
        if sign == "definition":
            notes.append("correction terms damped by s0^{-(m+l+1)i}; verdict reported, not asserted")
        if lhs.prec < prec or rhs.prec < prec:
            notes.append(f"compared to O(u^{min(lhs.prec, rhs.prec)}) only")
        report = VerificationReport(
            lhs=lhs,
            rhs=rhs,
            l_star=l_top,
            i_star=self.i_star(q, m, prec),
            term_valuations={i: (None if t.is_zero else t.val) for i, t in terms.items()},
            l_bounds=bounds,
            zeta_sign=sign,
            label="main",
            notes=notes,
        )
        logger.info("verify_main: %s (matched to O(u^%d))", report.verdict, report.matched_prec)
        return report

    def telescoping_step(self, a: LaurentSeries, s: PadicInt, l: int, prec: int) -> VerificationReport:
        """
        Check sum_{deg k <= l+1} <k+a>^{-s} = -sum_i binom(-s, i) u^{(m+l+1) i} sum_{deg k <= l} <k+a>^{-(s+i)}.

        The right side runs over positive multiples i of q-1 with (m+l+1) i < prec.
        """
        if a.is_zero or a.val >= 0:
            raise NotInA(f"|a|_inf must exceed 1, but v_inf(a) = {a.val}")
        field = a.field
        q, m = field.q, -a.val
        lhs = self.zeta.inner_sum(a, s, l + 1, prec=prec)
        step = (m + l + 1) * (q - 1)
        top = ((prec - 1) // step) * (q - 1)
        if top and s.modulus <= top:
            raise InsufficientDigitPrecision(
                f"{s.prec} digits of s cannot resolve binom(-s, i) up to i = {top}")

        neg_s = padic_neg(s)
        terms = []
        valuations: Dict[int, Optional[int]] = {}
        for i in range(q - 1, top + 1, q - 1):
            k = (m + l + 1) * i
            c = binom_mod_p(neg_s, i)
            if not c:
                valuations[i] = None
                continue
            inner = self.zeta.inner_sum(a, padic_add_int(s, i), l, prec=prec - k)
            term = inner.shift(k).scale_int(-c)
            valuations[i] = None if term.is_zero else term.val
            terms.append(term)
        rhs = sum_series(terms, field, lhs.prec)
        return VerificationReport(
            lhs=lhs,
            rhs=rhs,
            l_star=l,
            i_star=top,
            term_valuations=valuations,
            l_bounds={l: inner_bound(q, m, l), l + 1: inner_bound(q, m, l + 1)},
            label="telescope",
        )
