"""Export service for the JSON result format."""
import json
from typing import Any, Dict, Optional

from models.field import FieldSpec, FqElem
from models.laurent import LaurentSeries


def field_to_dict(field: FieldSpec) -> Dict[str, Any]:
    """{p, e, modulus} with the modulus coefficients low-to-high."""
    return {"p": field.p, "e": field.e, "modulus": list(field.modulus)}


def series_to_dict(series: LaurentSeries) -> Dict[str, Any]:
    """
    {val, prec, coeffs} where coeffs lists the digit vector of every tracked coefficient.

    A zero series has val = prec and no coefficients.
    """
    return {
        "val": series.val,
        "prec": series.prec,
        "coeffs": [list(FqElem(series.field, c).coeffs) for c in series.indices],
    }


def build_result(series: LaurentSeries, meta: Optional[Dict[str, Any]] = None,
                 verdict: Optional[str] = None) -> Dict[str, Any]:
    """
    Assemble the result document.

    Args:
        series: The computed series
        meta: Run metadata (l_star, i_star, term_valuations, ...)
        verdict: "match" or "mismatch" for verification runs, else None

    Returns:
        Dictionary following the {field, series, meta, verdict} layout
    """
    return {
        "field": field_to_dict(series.field),
        "series": series_to_dict(series),
        "meta": dict(meta or {}),
        "verdict": verdict,
    }


def dumps_result(data: Dict[str, Any]) -> str:
    """Serialize with sorted keys so identical results give identical bytes."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def export_result_to_json(data: Dict[str, Any], file_path: str):
    """
    Write a result document to a JSON file.

    Args:
        data: Result document from build_result
        file_path: Path to save JSON file
    """
    with open(file_path, "w", encoding="utf-8") as f:
        f.write(dumps_result(data))
        f.write("\n")
