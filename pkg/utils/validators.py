"""Validation functions for command-line input."""
import re
from typing import Dict, List, Optional, Tuple

from models.field import FieldSpec, parse_field_spec
from models.laurent import LaurentSeries
from models.padic import PadicInt, padic_from_digits, padic_from_int
from utils.errors import ZetaCompassError

TERM_PATTERN = re.compile(
    r"^(?:(?P<coef>\d+|\[[\d,\s]*\])\s*\*?\s*)?(?:(?P<var>T)(?:\^(?P<exp>-?\d+))?)?$")


def validate_required(value: str, field_name: str = "Field") -> Tuple[bool, Optional[str]]:
    """
    Validate that a required field is not empty.

    Args:
        value: The value to validate
        field_name: Name of the field for error messages

    Returns:
        Tuple of (is_valid, error_message)
    """
    if value is None or not str(value).strip():
        return False, f"{field_name} is required"
    return True, None


def validate_integer(value: str, field_name: str = "Field", allow_empty: bool = True) -> Tuple[bool, Optional[str], Optional[int]]:
    """
    Validate an integer value.

    Args:
        value: Integer string to validate
        field_name: Name of the field for error messages
        allow_empty: Whether empty values are allowed

    Returns:
        Tuple of (is_valid, error_message, parsed_value)
    """
    if value is None or not str(value).strip():
        if allow_empty:
            return True, None, None
        return False, f"{field_name} is required", None

    try:
        return True, None, int(str(value).strip())
    except ValueError:
        return False, f"{field_name} must be a valid integer", None


def validate_precision(value: str, field_name: str = "Precision", minimum: int = 1) -> Tuple[bool, Optional[str], Optional[int]]:
    """
    Validate a precision value (an integer no smaller than minimum).

    Returns:
        Tuple of (is_valid, error_message, parsed_value)
    """
    is_valid, error, parsed = validate_integer(value, field_name, allow_empty=False)
    if not is_valid:
        return is_valid, error, None
    if parsed < minimum:
        return False, f"{field_name} must be at least {minimum}", None
    return True, None, parsed


def validate_field_spec(text: str) -> Tuple[bool, Optional[str], Optional[FieldSpec]]:
    """
    Validate a field description such as "3", "2^2" or "2^3:1,0,1,1".

    Returns:
        Tuple of (is_valid, error_message, field)
    """
    is_valid, error = validate_required(text, "Field")
    if not is_valid:
        return False, error, None
    try:
        return True, None, parse_field_spec(text)
    except ZetaCompassError as exc:
        return False, f"{exc.code}: {exc.message}", None


def _parse_coefficient(text: str, field: FieldSpec) -> int:
    text = text.strip()
    if text.startswith("["):
        digits = [int(d) for d in text.strip("[]").split(",") if d.strip()]
        if len(digits) != field.e or any(not 0 <= d < field.p for d in digits):
            raise ValueError(f"coefficient {text} is not a digit vector of length {field.e} over F_{field.p}")
        return field.element(digits).index
    value = int(text)
    if not 0 <= value < field.q:
        raise ValueError(f"coefficient {value} is outside 0..{field.q - 1}")
    return value


def _split_top_level(text: str, separators: str) -> List[Tuple[str, str]]:
    """Split at separators outside brackets and not right after '^', keeping the separator before each part."""
    parts, depth, start, sign = [], 0, 0, "+"
    for pos, char in enumerate(text):
        if char == "[":
            depth += 1
        elif char == "]":
            depth -= 1
        elif char in separators and depth == 0 and (pos == 0 or text[pos - 1] != "^"):
            parts.append((sign, text[start:pos].strip()))
            sign, start = char, pos + 1
    parts.append((sign, text[start:].strip()))
    if len(parts) > 1 and not parts[0][1] and text.lstrip()[:1] in separators:
        parts.pop(0)
    return parts


def _parse_terms(text: str, field: FieldSpec) -> Dict[int, int]:
    """Exponent of T -> coefficient index."""
    terms: Dict[int, int] = {}
    if "T" not in text:
        pieces = [piece for _, piece in _split_top_level(text, ",")]
        degree = len(pieces) - 1
        for k, piece in enumerate(pieces):
            terms[degree - k] = _parse_coefficient(piece, field)
        return terms
    for sign, piece in _split_top_level(text.replace(" ", ""), "+-"):
        match = TERM_PATTERN.match(piece)
        if not piece or not match or not (match.group("coef") or match.group("var")):
            raise ValueError(f"cannot read term {piece!r}")
        c = _parse_coefficient(match.group("coef"), field) if match.group("coef") else 1
        if sign == "-":
            c = field.neg_table[c]
        exponent = 0
        if match.group("var"):
            exponent = int(match.group("exp")) if match.group("exp") else 1
        terms[exponent] = field.add_table[terms.get(exponent, 0)][c]
    return terms


def validate_polynomial(text: str, field: FieldSpec, prec: int) -> Tuple[bool, Optional[str], Optional[LaurentSeries]]:
    """
    Validate a Laurent polynomial in T and build it as a series known below u^prec.

    Accepts the comma form "c_m,...,c_0" (coefficients of T^m ... T^0) and the sugar form
    "T^2+T+1", "1+T^-1" or "[1,1]*T+1". Coefficients of F_{p^e} are bracketed digit vectors.

    Returns:
        Tuple of (is_valid, error_message, series)
    """
    is_valid, error = validate_required(text, "Polynomial")
    if not is_valid:
        return False, error, None
    try:
        terms = _parse_terms(text.strip(), field)
    except ValueError as exc:
        return False, f"Polynomial {text!r}: {exc}", None

    series = LaurentSeries.zero(field, prec)
    for exponent in sorted(terms, reverse=True):
        c = terms[exponent]
        if c and -exponent < prec:
            series = series + LaurentSeries.monomial(field, c, -exponent, prec)
    return True, None, series


def validate_exponent(text: str, p: int, digits: int) -> Tuple[bool, Optional[str], Optional[PadicInt]]:
    """
    Validate a p-adic exponent: an integer (negative values wrap to p^K + n) or "digits:d0,d1,...".

    Returns:
        Tuple of (is_valid, error_message, exponent)
    """
    is_valid, error = validate_required(text, "Exponent")
    if not is_valid:
        return False, error, None
    text = text.strip()
    if text.startswith("digits:"):
        try:
            values = [int(d) for d in text[len("digits:"):].split(",") if d.strip()]
        except ValueError:
            return False, f"Exponent digits must be integers, got {text!r}", None
        if not values or any(not 0 <= d < p for d in values):
            return False, f"Exponent digits must lie in 0..{p - 1}", None
        return True, None, padic_from_digits(values, p)
    is_valid, error, value = validate_integer(text, "Exponent", allow_empty=False)
    if not is_valid:
        return False, error, None
    return True, None, padic_from_int(value, p, digits)
