"""Helper utility functions."""
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from models.field import FieldSpec, FqElem
from models.laurent import LaurentSeries

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """
    Apply func to every item, possibly on a thread pool, keeping input order.

    Args:
        func: Function to apply
        items: Inputs
        workers: Thread count; 1 runs sequentially

    Returns:
        Results in the order of items
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def sum_series(terms: Iterable[LaurentSeries], field: FieldSpec, prec: int) -> LaurentSeries:
    """Add series in the given order, starting from zero at precision prec."""
    total = LaurentSeries.zero(field, prec)
    for term in terms:
        total = total + term
    return total


def format_element(element: FqElem) -> str:
    """
    Format a field element: an integer for prime fields, a bracketed digit vector otherwise.

    Args:
        element: The element

    Returns:
        String like "2" or "[1,0]"
    """
    if element.field.e == 1:
        return str(element.index)
    return "[" + ",".join(str(c) for c in element.coeffs) + "]"


def _power_text(j: int) -> str:
    if j == 0:
        return ""
    if j < 0:
        return "T" if j == -1 else f"T^{-j}"
    return "u" if j == 1 else f"u^{j}"


def format_series(series: LaurentSeries) -> str:
    """
    Render "c*u^j + ... + O(u^N)" with u = 1/T; negative exponents print as powers of T.

    Args:
        series: The series

    Returns:
        Text rendering
    """
    parts = []
    for k, c in enumerate(series.indices):
        if not c:
            continue
        j = series.val + k
        coefficient = format_element(FqElem(series.field, c))
        power = _power_text(j)
        if not power:
            parts.append(coefficient)
        elif coefficient == "1":
            parts.append(power)
        else:
            parts.append(f"{coefficient}*{power}")
    parts.append(f"O(u^{series.prec})")
    return " + ".join(parts)


def format_polynomial(series: LaurentSeries) -> str:
    """
    Render a polynomial in T, highest degree first; "0" for zero.

    Args:
        series: Series with no tracked coefficients at positive powers of u

    Returns:
        Text like "T^2 + 2*T + 1"
    """
    parts = []
    for k, c in enumerate(series.indices):
        j = series.val + k
        if not c or j > 0:
            continue
        coefficient = format_element(FqElem(series.field, c))
        power = _power_text(j)
        if not power:
            parts.append(coefficient)
        elif coefficient == "1":
            parts.append(power)
        else:
            parts.append(f"{coefficient}*{power}")
    return " + ".join(parts) if parts else "0"
