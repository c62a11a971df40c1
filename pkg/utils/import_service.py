"""Import service for the JSON result format."""
import json
from typing import Any, Dict, Tuple

from models.field import FieldSpec, make_field
from models.laurent import LaurentSeries
from utils.errors import ParseError


def field_from_dict(data: Dict[str, Any]) -> FieldSpec:
    """Rebuild a field from {p, e, modulus}."""
    try:
        return make_field(int(data["p"]), int(data["e"]), [int(c) for c in data["modulus"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed field entry: {exc}")


def series_from_dict(field: FieldSpec, data: Dict[str, Any]) -> LaurentSeries:
    """
    Rebuild a series from {val, prec, coeffs}.

    Raises:
        ParseError: when entries are missing or the coefficient count does not match prec - val
    """
    try:
        val, prec = int(data["val"]), int(data["prec"])
        coeffs = [field.element([int(d) for d in c]).index for c in data["coeffs"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed series entry: {exc}")
    if not coeffs:
        if val != prec:
            raise ParseError(f"a zero series must have val = prec, got {val} and {prec}")
        return LaurentSeries.zero(field, prec)
    if len(coeffs) != prec - val:
        raise ParseError(f"expected {prec - val} coefficients, got {len(coeffs)}")
    return LaurentSeries._normalized(field, val, coeffs, prec)


def loads_result(text: str) -> Tuple[LaurentSeries, Dict[str, Any], Any]:
    """
    Parse a result document.

    Returns:
        Tuple of (series, meta, verdict)
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}")
    field = field_from_dict(data.get("field", {}))
    series = series_from_dict(field, data.get("series", {}))
    return series, data.get("meta", {}), data.get("verdict")


def import_result_from_json(file_path: str) -> Tuple[LaurentSeries, Dict[str, Any], Any]:
    """
    Read a result document from a JSON file.

    Args:
        file_path: Path to JSON file

    Returns:
        Tuple of (series, meta, verdict)
    """
    with open(file_path, "r", encoding="utf-8") as f:
        return loads_result(f.read())
