"""Runtime settings for Zeta Compass, read from the environment and an optional .env file."""
import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

from dotenv import load_dotenv

from utils.errors import ConfigError

PROJECT_ROOT = os.path.dirname(os.path.abspath(__file__))
ENV_PREFIX = "ZETA_COMPASS_"

ZETA_SIGNS = ("proof", "definition")
POW_METHODS = ("binomial", "digits")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    """Library-wide defaults. Controllers take one of these in their constructor."""

    digits: int = 32
    precision: int = 16
    l_cap: int = 12
    enum_cap: int = 2 ** 20
    i_cap: int = 256
    zeta_sign: str = "proof"
    pow_method: str = "binomial"
    workers: int = 1
    seed: int = 20240101
    log_level: str = "WARNING"

    def __post_init__(self):
        if self.digits < 1:
            raise ConfigError(f"digits must be >= 1, got {self.digits}")
        if self.precision < 1:
            raise ConfigError(f"precision must be >= 1, got {self.precision}")
        if self.l_cap < 0:
            raise ConfigError(f"l_cap must be >= 0, got {self.l_cap}")
        if self.enum_cap < 1:
            raise ConfigError(f"enum_cap must be >= 1, got {self.enum_cap}")
        if self.i_cap < 1:
            raise ConfigError(f"i_cap must be >= 1, got {self.i_cap}")
        if self.zeta_sign not in ZETA_SIGNS:
            raise ConfigError(f"zeta_sign must be one of {ZETA_SIGNS}, got {self.zeta_sign!r}")
        if self.pow_method not in POW_METHODS:
            raise ConfigError(f"pow_method must be one of {POW_METHODS}, got {self.pow_method!r}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.log_level.upper() not in LOG_LEVELS:
            raise ConfigError(f"log_level must be one of {LOG_LEVELS}, got {self.log_level!r}")

    def with_overrides(self, **overrides) -> "Settings":
        """Return a copy with the non-None overrides applied."""
        values = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **values)


def _read_int(env: Mapping[str, str], name: str, default: int) -> int:
    raw = env.get(ENV_PREFIX + name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}")


def _read_str(env: Mapping[str, str], name: str, default: str) -> str:
    raw = env.get(ENV_PREFIX + name)
    if raw is None or not raw.strip():
        return default
    return raw.strip()


def get_settings(env: Optional[Mapping[str, str]] = None, dotenv_path: Optional[str] = None) -> Settings:
    """
    Build settings from environment variables.

    Args:
        env: Mapping to read from. If None, loads .env (without overriding
             variables already set) and reads os.environ.
        dotenv_path: Optional explicit path to a .env file.

    Returns:
        Validated Settings instance
    """
    if env is None:
        load_dotenv(dotenv_path or os.path.join(PROJECT_ROOT, ".env"), override=False)
        env = os.environ

    defaults = Settings()
    return Settings(
        digits=_read_int(env, "DIGITS", defaults.digits),
        precision=_read_int(env, "PRECISION", defaults.precision),
        l_cap=_read_int(env, "L_CAP", defaults.l_cap),
        enum_cap=_read_int(env, "ENUM_CAP", defaults.enum_cap),
        i_cap=_read_int(env, "I_CAP", defaults.i_cap),
        zeta_sign=_read_str(env, "ZETA_SIGN", defaults.zeta_sign),
        pow_method=_read_str(env, "POW_METHOD", defaults.pow_method),
        workers=_read_int(env, "WORKERS", defaults.workers),
        seed=_read_int(env, "SEED", defaults.seed),
        log_level=_read_str(env, "LOG_LEVEL", defaults.log_level).upper(),
    )
