"""Controller for report-related operations: truncation tables and character sums."""
from typing import Any, Dict, List, Optional, Tuple

from config import Settings
from controllers.diffop_controller import DiffOpController
from controllers.zeta_controller import ZetaController
from models.field import FieldSpec, power_sum
from models.verification_report import VerificationReport
from utils.helpers import format_element, format_series


class ReportController:
    def __init__(self, settings: Optional[Settings] = None, zeta: Optional[ZetaController] = None):
        """
        Initialize the report controller.

        Args:
            settings: Settings instance
            zeta: ZetaController used for the truncation levels
        """
        self.settings = settings or Settings()
        self.zeta = zeta or ZetaController(self.settings)

    def get_bounds_summary(self, q: int, m: int, prec: int, z: int = 0, v_s0: int = 1,
                           sign: Optional[str] = None) -> Dict[str, Any]:
        """
        Get the truncation data of a run.

        Returns:
            Dictionary with l_star, i_star and the per-l bound table
        """
        l_top, bounds = self.zeta.l_star(q, m, z, v_s0, prec, sign)
        return {
            "l_star": l_top,
            "i_star": DiffOpController.i_star(q, m, prec),
            "l_bounds": bounds,
        }

    def get_power_sums(self, field: FieldSpec, max_i: int) -> List[Tuple[int, str]]:
        """
        Get sum of alpha^i over F_q for i = 0 .. max_i.

        Returns:
            List of (i, formatted value)
        """
        return [(i, format_element(power_sum(field, i))) for i in range(max_i + 1)]

    def render_bounds(self, summary: Dict[str, Any]) -> str:
        lines = [f"l* = {summary['l_star']}", f"i* = {summary['i_star']}", "l  bound"]
        for l, bound in sorted(summary["l_bounds"].items()):
            lines.append(f"{l:<2} {bound}")
        return "\n".join(lines)

    def render_power_sums(self, rows: List[Tuple[int, str]]) -> str:
        return "\n".join(f"{i}: {value}" for i, value in rows)

    def render_report(self, report: VerificationReport) -> str:
        """Plain-text rendering of a verification report."""
        lines = [
            f"verdict: {report.verdict}",
            f"label: {report.label}",
            f"zeta_sign: {report.zeta_sign}",
            f"matched_prec: {report.matched_prec}",
            f"l*: {report.l_star}",
            f"i*: {report.i_star}",
            f"lhs: {format_series(report.lhs)}",
            f"rhs: {format_series(report.rhs)}",
        ]
        if report.first_difference is not None:
            lines.append(f"first difference at u^{report.first_difference}")
        lines.append("term valuations:")
        for i, v in sorted(report.term_valuations.items()):
            lines.append(f"  i={i}: {'zero' if v is None else v}")
        lines.extend(f"note: {note}" for note in report.notes)
        return "\n".join(lines)
