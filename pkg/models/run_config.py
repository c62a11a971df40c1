import random
from dataclasses import dataclass
from typing import Optional

from config import Settings
from controllers.zeta_controller import ZetaController
from models.field import FieldSpec
from models.laurent import LaurentSeries
from models.padic import PadicInt, padic_from_digits
from models.s_point import SPoint
from utils.errors import BadPrecision, InsufficientDigitPrecision, NotInA, ParseError, ZeroInput
from utils.validators import (
    validate_exponent,
    validate_field_spec,
    validate_polynomial,
    validate_precision,
)

MIN_PRECISION = 4
OUTPUT_FORMATS = ("text", "json")


def series_precision(prec: int) -> int:
    """Precision at which the polynomial a is built; it is exact, so this only bounds the work."""
    return 2 * prec + 8


@dataclass
class RunConfig:
    """One command-line invocation after parsing and checking."""

    command: str
    field: FieldSpec
    prec: int
    digits: int
    zeta_sign: str
    output_format: str = "text"
    a: Optional[LaurentSeries] = None
    s: Optional[PadicInt] = None
    s0: Optional[LaurentSeries] = None
    z: int = 0
    n: int = 0
    l: int = 0
    max_i: Optional[int] = None
    method: str = "recurrence"
    seed: int = 0
    output: Optional[str] = None

    @property
    def m(self) -> int:
        return -self.a.val if self.a is not None else 0

    @classmethod
    def from_args(cls, args, settings: Settings) -> "RunConfig":
        """
        Build a run configuration from parsed arguments; flags override settings.

        Raises:
            ParseError: malformed field, polynomial, exponent or integer input
            BadPrecision: precision below the minimum
            NotInA: a with |a|_inf <= 1 where a Hurwitz shift is required
            InsufficientDigitPrecision: p^K < N (m+1) on verify runs
            NoConvergence: eval-zeta with no truncation level within l_cap
        """
        ok, error, field = validate_field_spec(args.q)
        if not ok:
            raise ParseError(error)

        prec = settings.precision
        if getattr(args, "prec", None) is not None:
            ok, error, prec = validate_precision(str(args.prec), "Precision")
            if not ok:
                raise ParseError(error)
        if prec < MIN_PRECISION:
            raise BadPrecision(f"precision must be at least {MIN_PRECISION}, got {prec}")

        digits = args.digits if getattr(args, "digits", None) is not None else settings.digits
        if digits < 1:
            raise ParseError(f"digit precision must be positive, got {digits}")
        seed = args.seed if getattr(args, "seed", None) is not None else settings.seed

        config = cls(
            command=args.command,
            field=field,
            prec=prec,
            digits=digits,
            zeta_sign=getattr(args, "zeta_sign", None) or settings.zeta_sign,
            output_format="json" if getattr(args, "json", False) else "text",
            z=getattr(args, "z", 0) or 0,
            n=getattr(args, "n", 0) or 0,
            l=getattr(args, "l", 0) or 0,
            max_i=getattr(args, "max_i", None),
            method=getattr(args, "method", None) or "recurrence",
            seed=seed,
            output=getattr(args, "output", None),
        )

        a_text = getattr(args, "a", None)
        if a_text is not None:
            a = config._parse_series(a_text, series_precision(prec))
            if a.is_zero or a.val >= 0:
                raise NotInA(f"{a_text!r} has |a|_inf <= 1")
            config.a = a

        s_text = getattr(args, "s", None)
        if s_text is not None:
            config.s = config._parse_exponent(s_text)

        s0_text = getattr(args, "s0", None)
        if s0_text is not None:
            config.s0 = config._parse_series(s0_text, series_precision(prec))
            if config.s0.is_zero:
                raise ZeroInput(f"s0 = {s0_text!r} is zero")

        if config.command == "eval-zeta" and config.a is not None and config.s0 is not None:
            # a and s0 are exact; rebuild them deep enough for every damped level
            working = config.working_series_precision(settings)
            if working > series_precision(prec):
                config.a = config._parse_series(a_text, working)
                config.s0 = config._parse_series(s0_text, working)

        if config.command == "verify":
            config.check_digit_precision()
        return config

    def _parse_series(self, text: str, precision: int) -> LaurentSeries:
        ok, error, value = validate_polynomial(text, self.field, precision)
        if not ok:
            raise ParseError(error)
        return value

    def working_series_precision(self, settings: Settings) -> int:
        """
        Precision at which a and s0 are built for eval-zeta.

        Raises:
            NoConvergence: no truncation level within l_cap
        """
        zeta = ZetaController(settings)
        relative = zeta.working_precision(self.field.q, self.m, self.z, self.s0.val, self.prec, self.zeta_sign)
        return max(series_precision(self.prec), relative + abs(self.s0.val))

    def _parse_exponent(self, text: str) -> PadicInt:
        if text.strip() == "random":
            rng = random.Random(self.seed)
            return padic_from_digits([rng.randrange(self.field.p) for _ in range(self.digits)], self.field.p)
        ok, error, s = validate_exponent(text, self.field.p, self.digits)
        if not ok:
            raise ParseError(error)
        return s

    def check_digit_precision(self):
        """K >= ceil(log_p(N (m+1))), i.e. p^K >= N (m+1)."""
        if self.s is None:
            return
        needed = self.prec * (self.m + 1)
        if self.s.modulus < needed:
            raise InsufficientDigitPrecision(
                f"{self.s.prec} digits of s give p^K = {self.s.modulus} < N(m+1) = {needed}")

    def to_dict(self):
        """Convert the configuration to a dictionary representation."""
        data = {
            "command": self.command,
            "field": self.field.describe(),
            "prec": self.prec,
            "digits": self.digits,
            "zeta_sign": self.zeta_sign,
            "z": self.z,
        }
        if self.s0 is not None and self.s is not None:
            data["point"] = SPoint(self.s0, self.s).to_dict()
        return data
