from dataclasses import dataclass, field
from typing import Dict, List, Optional

from models.laurent import LaurentSeries

MATCH = "match"
MISMATCH = "mismatch"


@dataclass
class VerificationReport:
    """Outcome of comparing two independently computed sides of an identity."""

    lhs: LaurentSeries
    rhs: LaurentSeries
    l_star: int
    i_star: int
    term_valuations: Dict[int, Optional[int]] = field(default_factory=dict)
    l_bounds: Dict[int, int] = field(default_factory=dict)
    zeta_sign: str = "proof"
    label: str = "main"
    notes: List[str] = field(default_factory=list)

    @property
    def matched_prec(self) -> int:
        return min(self.lhs.prec, self.rhs.prec)

    @property
    def first_difference(self) -> Optional[int]:
        return self.lhs.first_difference(self.rhs)

    @property
    def verdict(self) -> str:
        return MATCH if self.first_difference is None else MISMATCH

    @property
    def matched(self) -> bool:
        return self.verdict == MATCH

    def to_dict(self):
        """Convert the report metadata to a dictionary representation (series excluded)."""
        return {
            "label": self.label,
            "zeta_sign": self.zeta_sign,
            "matched_prec": self.matched_prec,
            "l_star": self.l_star,
            "i_star": self.i_star,
            "term_valuations": {str(i): v for i, v in sorted(self.term_valuations.items())},
            "l_bounds": {str(l): b for l, b in sorted(self.l_bounds.items())},
            "verdict": self.verdict,
            "first_difference": self.first_difference,
            "notes": list(self.notes),
        }
