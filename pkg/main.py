"""Main entry point for Zeta Compass."""
import argparse
import logging
import sys
from typing import List, Optional

from config import LOG_LEVELS, ZETA_SIGNS, Settings, get_settings
from controllers.diffop_controller import DiffOpController
from controllers.export_controller import ExportController
from controllers.report_controller import ReportController
from controllers.zeta_controller import ZetaController
from models.hurwitz_params import HurwitzParams
from models.laurent import LaurentSeries
from models.run_config import RunConfig
from utils.errors import ParseError, ZetaCompassError
from utils.helpers import format_polynomial, format_series

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2


class _Parser(argparse.ArgumentParser):
    """Argument parser that reports usage errors as ParseError instead of exiting with status 2."""

    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", required=True, help="field: P^E[:c0,...,cE] or a prime power")
    common.add_argument("--prec", type=int, help="target precision N (terms below u^N)")
    common.add_argument("--digits", type=int, help="p-adic digit precision K of s")
    common.add_argument("--zeta-sign", dest="zeta_sign", choices=ZETA_SIGNS)
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("--output", help="also write the JSON result to this file")
    common.add_argument("--seed", type=int, help="seed for --s random")
    common.add_argument("--workers", type=int, help="threads for independent terms")
    common.add_argument("--log-level", dest="log_level", type=str.upper, choices=LOG_LEVELS)

    parser = _Parser(prog="zeta-compass", description="Goss zeta values and difference equations over F_q(T)")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True

    evaluate = commands.add_parser("eval-zeta", parents=[common], help="evaluate zeta_inf(s0, s, a, z)")
    evaluate.add_argument("--a", required=True)
    evaluate.add_argument("--s", required=True, help="INT, digits:d0,d1,... or random")
    evaluate.add_argument("--z", type=int, default=0)
    evaluate.add_argument("--s0", default="T^-1", help="s0 as a Laurent polynomial in T (default 1/T)")

    special = commands.add_parser("special", parents=[common], help="special value zeta_inf(-n)")
    special.add_argument("--n", type=int, required=True)
    special.add_argument("--method", choices=("recurrence", "direct", "both"), default="recurrence")

    verify = commands.add_parser("verify", parents=[common], help="check the main difference equation")
    verify.add_argument("--a", required=True)
    verify.add_argument("--s", required=True, help="INT, digits:d0,d1,... or random")

    bounds = commands.add_parser("bounds", parents=[common], help="truncation levels l* and i*")
    bounds.add_argument("--a", required=True)
    bounds.add_argument("--z", type=int, default=0)

    sums = commands.add_parser("power-sums", parents=[common], help="sum of alpha^i over F_q")
    sums.add_argument("--max-i", dest="max_i", type=int)

    telescope = commands.add_parser("telescope", parents=[common], help="check one level-to-level step")
    telescope.add_argument("--a", required=True)
    telescope.add_argument("--s", required=True, help="INT, digits:d0,d1,... or random")
    telescope.add_argument("--l", type=int, default=0)
    return parser


def _emit(config: RunConfig, text: str, json_text: Optional[str]):
    if config.output and json_text is not None:
        with open(config.output, "w", encoding="utf-8") as f:
            f.write(json_text + "\n")
    print(json_text if config.output_format == "json" and json_text is not None else text)


def _cmd_eval_zeta(config: RunConfig, settings: Settings) -> int:
    zeta = ZetaController(settings)
    params = HurwitzParams(config.a, config.z, config.prec)
    value = zeta.hurwitz_goss(config.s0, config.s, params, config.zeta_sign)
    l_top, bounds = zeta.l_star(config.field.q, params.m, config.z, config.s0.val, config.prec,
                                config.zeta_sign)
    meta = {"l_star": l_top, "l_bounds": {str(l): b for l, b in bounds.items()},
            "zeta_sign": config.zeta_sign, "params": params.to_dict()}
    _emit(config, format_series(value), ExportController().render_series(value, meta))
    return EXIT_OK


def _cmd_special(config: RunConfig, settings: Settings) -> int:
    zeta = ZetaController(settings)
    values = {}
    if config.method in ("recurrence", "both"):
        values["recurrence"] = zeta.goss_special_recurrence(config.n, config.field)
    if config.method in ("direct", "both"):
        values["direct"] = zeta.goss_special_direct(config.n, config.field)
    value = values.get("recurrence", values.get("direct"))
    verdict = None
    if len(values) == 2:
        verdict = "match" if values["recurrence"].equals_to(values["direct"]) else "mismatch"
    meta = {"n": config.n, "method": config.method}
    _emit(config, format_polynomial(value), ExportController().render_series(value, meta, verdict))
    return EXIT_MISMATCH if verdict == "mismatch" else EXIT_OK


def _cmd_verify(config: RunConfig, settings: Settings) -> int:
    diffop = DiffOpController(settings)
    report = diffop.verify_main(config.a, config.s, config.prec, config.zeta_sign)
    _emit(config, ReportController(settings, diffop.zeta).render_report(report),
          ExportController().render_report(report))
    return EXIT_OK if report.matched else EXIT_MISMATCH


def _cmd_bounds(config: RunConfig, settings: Settings) -> int:
    reports = ReportController(settings)
    summary = reports.get_bounds_summary(config.field.q, config.m, config.prec, config.z, 1, config.zeta_sign)
    meta = {"l_star": summary["l_star"], "i_star": summary["i_star"],
            "l_bounds": {str(l): b for l, b in summary["l_bounds"].items()}}
    empty = LaurentSeries.zero(config.field, config.prec)
    _emit(config, reports.render_bounds(summary), ExportController().render_series(empty, meta))
    return EXIT_OK


def _cmd_power_sums(config: RunConfig, settings: Settings) -> int:
    reports = ReportController(settings)
    max_i = config.max_i if config.max_i is not None else 3 * (config.field.q - 1)
    rows = reports.get_power_sums(config.field, max_i)
    print(reports.render_power_sums(rows))
    return EXIT_OK


def _cmd_telescope(config: RunConfig, settings: Settings) -> int:
    diffop = DiffOpController(settings)
    report = diffop.telescoping_step(config.a, config.s, config.l, config.prec)
    _emit(config, ReportController(settings, diffop.zeta).render_report(report),
          ExportController().render_report(report))
    return EXIT_OK if report.matched else EXIT_MISMATCH


COMMANDS = {
    "eval-zeta": _cmd_eval_zeta,
    "special": _cmd_special,
    "verify": _cmd_verify,
    "bounds": _cmd_bounds,
    "power-sums": _cmd_power_sums,
    "telescope": _cmd_telescope,
}


def run(argv: Optional[List[str]] = None, settings: Optional[Settings] = None) -> int:
    """
    Parse arguments, dispatch one subcommand and return its exit status.

    Returns:
        0 on success or a matching verification, 2 on a mismatch, 1 on usage or domain errors
    """
    try:
        settings = settings or get_settings()
        args = build_parser().parse_args(argv)
        settings = settings.with_overrides(workers=args.workers, log_level=args.log_level,
                                           zeta_sign=args.zeta_sign, seed=args.seed)
        logging.basicConfig(level=settings.log_level.upper(), stream=sys.stderr,
                            format="%(levelname)s %(name)s: %(message)s")
        config = RunConfig.from_args(args, settings)
        logger.debug("run: %s", config.to_dict())
        return COMMANDS[config.command](config, settings)
    except ZetaCompassError as exc:
        logger.debug("run failed", exc_info=True)
        print(f"error: {exc.code}: {exc.message}", file=sys.stderr)
        return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
