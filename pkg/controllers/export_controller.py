"""Controller for export/import of computed series."""
from typing import Any, Dict, Optional, Tuple

from models.laurent import LaurentSeries
from models.verification_report import VerificationReport
from utils.export_service import build_result, dumps_result, export_result_to_json
from utils.import_service import import_result_from_json, loads_result


class ExportController:
    def render_series(self, series: LaurentSeries, meta: Optional[Dict[str, Any]] = None,
                      verdict: Optional[str] = None) -> str:
        """
        Render a series and its run metadata as JSON text.

        Args:
            series: The computed series
            meta: Run metadata
            verdict: Verification verdict, if any
        """
        return dumps_result(build_result(series, meta, verdict))

    def render_report(self, report: VerificationReport) -> str:
        """
        Render a verification report as JSON text; the series entry is the left-hand side.

        Args:
            report: The verification report
        """
        meta = report.to_dict()
        meta.pop("verdict")
        return dumps_result(build_result(report.lhs, meta, report.verdict))

    def export_series(self, file_path: str, series: LaurentSeries, meta: Optional[Dict[str, Any]] = None,
                      verdict: Optional[str] = None):
        """
        Write a series to a JSON file.

        Args:
            file_path: Path to save JSON file
        """
        export_result_to_json(build_result(series, meta, verdict), file_path)

    def import_series(self, file_path: str) -> Tuple[LaurentSeries, Dict[str, Any], Any]:
        """
        Read a series back from a JSON file.

        Returns:
            Tuple of (series, meta, verdict)
        """
        return import_result_from_json(file_path)

    def parse_series(self, text: str) -> Tuple[LaurentSeries, Dict[str, Any], Any]:
        return loads_result(text)
