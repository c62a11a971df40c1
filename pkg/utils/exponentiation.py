"""Exponentiation of 1-units by p-adic integers, <a>^s, and a^w on the S-plane."""
from models.laurent import LaurentSeries, is_monic_polynomial, one_unit_part
from models.padic import PadicInt, binomial_row
from models.s_point import SPoint
from utils.errors import FieldMismatch, NotMonic, NotOneUnit, ZeroInput


def _split_one_unit(g: LaurentSeries) -> LaurentSeries:
    """Return lambda = g - 1 after checking that g is a 1-unit."""
    if not g.is_one_unit():
        raise NotOneUnit("expected a series 1 + lambda with v(lambda) >= 1")
    return g - LaurentSeries.one(g.field, g.prec)


def unit_pow_binomial(g: LaurentSeries, s: PadicInt) -> LaurentSeries:
    """
    g^s = sum_j binom(s, j) lambda^j for the 1-unit g = 1 + lambda.

    Terms with j * v(lambda) >= prec(g) vanish modulo O(u^prec(g)) and are skipped.
    """
    lam = _split_one_unit(g)
    if s.p != g.field.p:
        raise FieldMismatch(f"exponent is {s.p}-adic but the field has characteristic {g.field.p}")
    prec = g.prec
    result = LaurentSeries.one(g.field, prec)
    if lam.is_zero:
        return result
    count = -(-prec // lam.val)
    coefficients = binomial_row(s, count)
    last = max((j for j, c in enumerate(coefficients) if c), default=0)
    power = None
    for j in range(1, last + 1):
        power = lam if power is None else (power * lam).truncate(prec)
        c = coefficients[j]
        if c:
            result = result + power.scale_int(c)
    return result


def unit_pow_digits(g: LaurentSeries, s: PadicInt) -> LaurentSeries:
    """
    g^s = prod_j (1 + omega^{p^j})^{c_j} for g = 1 + omega and s = sum_j c_j p^j.

    Uses (1 + omega)^{p^j} = 1 + omega^{p^j} in characteristic p.
    """
    omega = _split_one_unit(g)
    if s.p != g.field.p:
        raise FieldMismatch(f"exponent is {s.p}-adic but the field has characteristic {g.field.p}")
    prec = g.prec
    one = LaurentSeries.one(g.field, prec)
    result = one
    if omega.is_zero:
        return result
    frob = omega
    for c in s.digits:
        if frob.val >= prec:
            break
        factor = one + frob.truncate(prec)
        for _ in range(c):
            result = (result * factor).truncate(prec)
        frob = frob.frobenius()
    return result


def unit_pow(g: LaurentSeries, s: PadicInt, method: str = "binomial") -> LaurentSeries:
    """Dispatch to the binomial series (default) or the digit product."""
    if method == "digits":
        return unit_pow_digits(g, s)
    return unit_pow_binomial(g, s)


def bracket_pow(a: LaurentSeries, s: PadicInt, method: str = "binomial") -> LaurentSeries:
    """<a>^s; for a negative exponent pass padic_neg(s)."""
    if a.is_zero:
        raise ZeroInput("<0> is undefined")
    return unit_pow(one_unit_part(a), s, method)


def s_pow(a: LaurentSeries, w: SPoint, method: str = "binomial") -> LaurentSeries:
    """a^w = s0^{deg a} <a>^s for a monic polynomial a in T."""
    if not is_monic_polynomial(a):
        raise NotMonic("a^w is defined for monic polynomials in T only")
    if a.field != w.s0.field:
        raise FieldMismatch("a and s0 live in different fields")
    degree = -a.val
    return w.s0.int_pow(degree) * bracket_pow(a, w.s, method)
