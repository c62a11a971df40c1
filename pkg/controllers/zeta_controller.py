"""Controller for Goss zeta evaluations: inner sums, the Hurwitz-type refinement and special values."""
import itertools
import logging
import threading
from collections import OrderedDict
from typing import Dict, List, Optional, Tuple

from config import Settings
from models.field import FieldSpec, monic_polynomials, poly_add, poly_pow, poly_scale
from models.hurwitz_params import HurwitzParams
from models.laurent import LaurentSeries, one_unit_part
from models.padic import PadicInt, binom_mod_p, padic_from_int, padic_neg
from models.s_point import SPoint
from utils.errors import BadPrecision, EnumerationTooLarge, FieldMismatch, NoConvergence, NotInA
from utils.exponentiation import bracket_pow, unit_pow
from utils.helpers import ordered_map, sum_series

logger = logging.getLogger(__name__)

SIGN_FACTORS = {"proof": 1, "definition": -1}
INNER_CACHE_SIZE = 1024


def inner_bound(q: int, m: int, l: int) -> int:
    """Lower bound (q-1)(2m+l)(l+1)/2 for v_inf of the level-l inner sum."""
    return (q - 1) * (2 * m + l) * (l + 1) // 2


def damping_shift(sigma: int, m: int, l: int, z: int, v_s0: int) -> int:
    """v_inf of the level-l damping factor s0^{sigma (m+l+1) z}."""
    return sigma * (m + l + 1) * z * v_s0


class ZetaController:
    def __init__(self, settings: Optional[Settings] = None, cache_size: int = INNER_CACHE_SIZE):
        """
        Initialize the zeta controller.

        Args:
            settings: Settings instance (caps, exponent method, workers)
            cache_size: Most inner sums kept; the least recently used one is dropped first
        """
        self.settings = settings or Settings()
        self.cache_size = cache_size
        self._inner_cache: "OrderedDict[tuple, LaurentSeries]" = OrderedDict()
        self._cache_lock = threading.Lock()
        self._special_cache: Dict[Tuple[FieldSpec, int], List[int]] = {}

    def _cached_inner(self, key: tuple) -> Optional[LaurentSeries]:
        with self._cache_lock:
            value = self._inner_cache.get(key)
            if value is not None:
                self._inner_cache.move_to_end(key)
            return value

    def _store_inner(self, key: tuple, value: LaurentSeries):
        with self._cache_lock:
            self._inner_cache[key] = value
            self._inner_cache.move_to_end(key)
            while len(self._inner_cache) > self.cache_size:
                self._inner_cache.popitem(last=False)

    def _check_enumeration(self, q: int, l: int):
        if l > self.settings.l_cap:
            raise EnumerationTooLarge(f"level {l} exceeds l_cap = {self.settings.l_cap}")
        if q ** (l + 1) > self.settings.enum_cap:
            raise EnumerationTooLarge(
                f"q^(l+1) = {q}^{l + 1} exceeds the enumeration cap {self.settings.enum_cap}")

    @staticmethod
    def _check_in_a(a: LaurentSeries) -> int:
        if a.is_zero or a.val >= 0:
            raise NotInA(f"|a|_inf must exceed 1, but v_inf(a) = {a.val}")
        return -a.val

    def inner_sum(self, a: LaurentSeries, s: PadicInt, l: int, prec: Optional[int] = None) -> LaurentSeries:
        """
        Sum of 1/<k+a>^s over all k in F_q[1/T] with deg k <= l.

        Writes <k+a> = x + w with x = <a> and w = sgn(a)^{-1} k T^{-m}, so every
        term is a 1-unit raised to -s.

        Args:
            a: Element of k_inf with v_inf(a) < 0
            s: Exponent
            l: Degree bound for k in 1/T
            prec: Target precision; defaults to the precision of <a>

        Returns:
            The inner sum at precision min(prec, prec(<a>))
        """
        m = self._check_in_a(a)
        if l < 0:
            raise ValueError(f"level must be nonnegative, got {l}")
        field = a.field
        self._check_enumeration(field.q, l)

        x = one_unit_part(a)
        target = x.prec if prec is None else prec
        if target > x.prec:
            logger.warning("inner_sum: <a> is known to O(u^%d) only, below the requested %d",
                           x.prec, target)
            target = x.prec
        if target <= 0:
            raise BadPrecision(f"inner sum needs a positive precision, got {target}")

        key = (a, s, l, target, self.settings.pow_method)
        cached = self._cached_inner(key)
        if cached is not None:
            return cached

        x = x.truncate(target)
        base = list(x.indices) + [0] * (target - len(x.indices))
        add, mul = field.add_table, field.mul_table
        sign_inv = field.inv_table[a.indices[0]]
        neg_s = padic_neg(s)
        method = self.settings.pow_method
        positions = [m + j for j in range(l + 1)]

        def term(b: Tuple[int, ...]) -> LaurentSeries:
            indices = list(base)
            for pos, coefficient in zip(positions, b):
                if coefficient and pos < target:
                    indices[pos] = add[indices[pos]][mul[sign_inv][coefficient]]
            return unit_pow(LaurentSeries(field, 0, tuple(indices), target), neg_s, method)

        logger.debug("inner_sum: enumerating %d polynomials at level %d, precision %d",
                     field.q ** (l + 1), l, target)
        terms = ordered_map(term, itertools.product(range(field.q), repeat=l + 1), self.settings.workers)
        result = sum_series(terms, field, target)
        self._store_inner(key, result)
        return result

    def inner_power_sum(self, a: LaurentSeries, i: int, l: int, prec: Optional[int] = None) -> LaurentSeries:
        """
        Sum of <k+a>^i over deg k <= l for a nonnegative integer i, by integer powering.

        Zero whenever i < (q-1)(l+1), since every coordinate power sum must be nonzero.
        """
        m = self._check_in_a(a)
        if i < 0:
            raise ValueError("inner_power_sum takes a nonnegative exponent")
        field = a.field
        self._check_enumeration(field.q, l)
        x = one_unit_part(a)
        target = x.prec if prec is None else min(prec, x.prec)
        x = x.truncate(target)

        terms = []
        for b in itertools.product(range(field.q), repeat=l + 1):
            k = LaurentSeries.zero(field, target)
            for j, coefficient in enumerate(b):
                if coefficient and m + j < target:
                    k = k + LaurentSeries.monomial(field, coefficient, m + j, target)
            w = k.scale(field.element(a.indices[0]).inverse())
            terms.append((x + w).int_pow(i))
        return sum_series(terms, field, target)

    def l_star(self, q: int, m: int, z: int, v_s0: int, prec: int,
               sign: Optional[str] = None, extra_levels: int = 0) -> Tuple[int, Dict[int, int]]:
        """
        Truncation level for the l-sum of zeta_inf(s0, s, a, z).

        The level-l term has valuation at least
        (q-1)(2m+l)(l+1)/2 + sigma (m+l+1) z v_inf(s0), with sigma = +1 for the proof
        convention and -1 for the definition convention.

        Args:
            extra_levels: Levels past l* whose bounds are also tabulated

        Returns:
            (l*, {l: bound for l <= l* + extra_levels}) where l* is the least level whose bound
            reaches prec and from which the bound no longer decreases
        """
        if extra_levels < 0:
            raise ValueError(f"extra_levels must be nonnegative, got {extra_levels}")
        sigma = SIGN_FACTORS[sign or self.settings.zeta_sign]

        def bound(l: int) -> int:
            return inner_bound(q, m, l) + damping_shift(sigma, m, l, z, v_s0)

        bounds = {}
        for l in range(self.settings.l_cap + 1):
            bounds[l] = bound(l)
            growth = (q - 1) * (m + l + 1) + sigma * z * v_s0
            if bounds[l] >= prec and growth >= 0:
                if l + extra_levels > self.settings.l_cap:
                    break
                for extra in range(l + 1, l + extra_levels + 1):
                    bounds[extra] = bound(extra)
                return l, bounds
        raise NoConvergence(
            f"level bound does not reach precision {prec} within l_cap = {self.settings.l_cap}")

    def working_precision(self, q: int, m: int, z: int, v_s0: int, prec: int,
                          sign: Optional[str] = None, extra_levels: int = 0) -> int:
        """
        Relative precision <a> and s0 must carry for hurwitz_goss to reach O(u^prec).

        A damping factor of negative valuation -d asks the level-l inner sum for O(u^{prec+d}).
        """
        sign = sign or self.settings.zeta_sign
        levels = self._levels(q, m, z, v_s0, prec, sign, extra_levels)[1]
        sigma = SIGN_FACTORS[sign]
        return prec - min([0] + [damping_shift(sigma, m, l, z, v_s0) for l in levels])

    def _levels(self, q: int, m: int, z: int, v_s0: int, prec: int, sign: str,
                extra_levels: int) -> Tuple[int, List[int]]:
        """Levels below l* whose bound is short of prec, then the extra levels, minus any damped past prec."""
        l_top, bounds = self.l_star(q, m, z, v_s0, prec, sign, extra_levels)
        logger.debug("l* = %d, bounds = %s", l_top, bounds)
        sigma = SIGN_FACTORS[sign]
        levels = [
            l for l in sorted(bounds)
            if (l > l_top or bounds[l] < prec) and damping_shift(sigma, m, l, z, v_s0) < prec
        ]
        return l_top, levels

    def hurwitz_goss(self, s0: LaurentSeries, s: PadicInt, params: HurwitzParams,
                     sign: Optional[str] = None, extra_levels: int = 0) -> LaurentSeries:
        """
        zeta_inf(s0, s, a, z) truncated at l* and carried to precision N.

        The damping factor is s0^{sigma (m+l+1) z}: sigma = +1 (proof) multiplies the level-l
        inner sum by (1/T)^{(m+l+1)z} when s0 = 1/T; sigma = -1 is the definition's s0^{-(m+l+1)z}.
        Levels up to l* whose bound already reaches N are O(u^N) and are not enumerated; the
        extra_levels past l* are enumerated regardless.

        Raises:
            BadPrecision: a or s0 too coarse for the result to reach O(u^N); see working_precision
        """
        a = params.a
        if s0.field != a.field:
            raise FieldMismatch("s0 and a live in different fields")
        point = SPoint(s0, s)
        sign = sign or self.settings.zeta_sign
        sigma = SIGN_FACTORS[sign]
        m, z, prec = params.m, params.z, params.prec
        if z < 0:
            logger.warning("hurwitz_goss: z = %d < 0 is outside the range used by the difference equation", z)

        _, levels = self._levels(a.field.q, m, z, point.s0.val, prec, sign, extra_levels)
        terms = []
        for l in levels:
            exponent = sigma * (m + l + 1) * z
            inner = self.inner_sum(a, s, l, prec=prec - exponent * s0.val)
            terms.append(inner if exponent == 0 else s0.int_pow(exponent) * inner)
        total = sum_series(terms, a.field, prec)
        if total.prec < prec:
            needed = self.working_precision(a.field.q, m, z, point.s0.val, prec, sign, extra_levels)
            raise BadPrecision(
                f"result is known to O(u^{total.prec}) only, below the requested {prec}; "
                f"a and s0 need relative precision {needed}")
        return total

    def goss_partial(self, w: SPoint, l_max: int, prec: Optional[int] = None) -> LaurentSeries:
        """
        Partial sum of zeta_inf(s0, s) = sum_l s0^{-l} sum_{a monic, deg a = l} <a>^{-s} up to l_max.

        Args:
            w: Point (s0, s)
            l_max: Highest degree included
            prec: Target precision (defaults to settings.precision)
        """
        field = w.s0.field
        prec = prec or self.settings.precision
        if l_max > self.settings.l_cap or field.q ** l_max > self.settings.enum_cap:
            raise EnumerationTooLarge(f"cannot enumerate monic polynomials up to degree {l_max}")
        neg_s = padic_neg(w.s)
        v = w.s0.val
        terms = []
        for l in range(l_max + 1):
            inner_prec = prec + l * v
            if inner_prec <= 0:
                continue
            units = [
                bracket_pow(LaurentSeries.from_poly(field, poly, inner_prec - l), neg_s,
                            self.settings.pow_method)
                for poly in monic_polynomials(field, l)
            ]
            inner = sum_series(units, field, inner_prec)
            terms.append(inner if l == 0 else w.s0.int_pow(-l) * inner)
        return sum_series(terms, field, prec)

    def goss_special_direct(self, n: int, field: FieldSpec) -> LaurentSeries:
        """
        zeta_inf(-n) = sum_l sum_{a monic, deg a = l} a^n as a polynomial in T.

        Levels with l(q-1) > n contribute nothing and are not enumerated.
        """
        if n < 0:
            raise ValueError("special values are defined for n >= 0")
        top = n // (field.q - 1)
        if field.q ** top > self.settings.enum_cap:
            raise EnumerationTooLarge(f"q^{top} monic polynomials exceed the enumeration cap")
        total: List[int] = []
        for l in range(top + 1):
            for poly in monic_polynomials(field, l):
                total = poly_add(field, total, poly_pow(field, poly, n))
        return LaurentSeries.from_poly(field, total, 1)

    def goss_special_recurrence(self, n: int, field: FieldSpec) -> LaurentSeries:
        """zeta_inf(-n) = 1 - sum_{i<n, (q-1) | (n-i)} binom(n, i) T^i zeta_inf(-i)."""
        return LaurentSeries.from_poly(field, self._special_poly(n, field), 1)

    def _special_poly(self, n: int, field: FieldSpec) -> List[int]:
        if n < 0:
            raise ValueError("special values are defined for n >= 0")
        for k in range(n + 1):
            if (field, k) in self._special_cache:
                continue
            digits = max(1, len(_base_digits(k, field.p)))
            top = padic_from_int(k, field.p, digits)
            value = [1]
            for i in range(k):
                if (k - i) % (field.q - 1):
                    continue
                c = binom_mod_p(top, i)
                if not c:
                    continue
                term = [0] * i + poly_scale(field, self._special_cache[(field, i)], field.neg_table[c])
                value = poly_add(field, value, term)
            self._special_cache[(field, k)] = value
        return self._special_cache[(field, n)]


def _base_digits(n: int, p: int) -> List[int]:
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out
