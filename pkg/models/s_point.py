from dataclasses import dataclass
from typing import Tuple

from models.laurent import LaurentSeries
from models.padic import PadicInt
from utils.errors import FieldMismatch, ZeroInput


@dataclass(frozen=True)
class SPoint:
    """A point w = (s0, s) of S = k_inf^* x Z_p."""

    s0: LaurentSeries
    s: PadicInt

    def __post_init__(self):
        if self.s0.is_zero:
            raise ZeroInput("s0 must be a nonzero element of k_inf")
        if self.s0.field.p != self.s.p:
            raise FieldMismatch(
                f"s is {self.s.p}-adic but the field has characteristic {self.s0.field.p}")

    def to_dict(self):
        """Convert the point to a dictionary representation."""
        return {
            "s0": {"val": self.s0.val, "prec": self.s0.prec, "indices": list(self.s0.indices)},
            "s": {"p": self.s.p, "digits": list(self.s.digits)},
        }


def s_abs(w: SPoint) -> Tuple[int, int]:
    """|w|_S = |s0|_inf |s|_p represented by the valuation pair (v_inf(s0), v_p(s))."""
    return w.s0.val, w.s.valuation()
