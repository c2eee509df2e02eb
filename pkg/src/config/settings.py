"""Runtime settings loaded from the environment.

Values come from the process environment, after an optional ``.env`` file has
been merged in by python-dotenv. Command-line flags take precedence over
anything defined here.
"""

import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from src.utils.errors import ConfigError

BUNDLED_FIXTURES = Path(__file__).resolve().parent.parent / "certify" / "fixtures"


@dataclass(frozen=True)
class Settings:
    """Configuration for searches, fixtures and the report archive.

    Attributes:
        fixtures_dir: Directory holding the figure fixtures.
        report_db: SQLite file used by the report archive.
        decide_bound: Default state bound for ``decide_separable``.
        reduction_bound: Default move bound for the weak-reduction search.
        log_level: Baseline logging level name.

    Example:
        >>> settings = load_settings()
        >>> settings.decide_bound
        10000
    """

    fixtures_dir: Path = BUNDLED_FIXTURES
    report_db: str = "data/reports.db"
    decide_bound: int = 10_000
    reduction_bound: int = 5_000
    log_level: str = "WARNING"

    def with_overrides(self, **changes) -> "Settings":
        """Return a copy with the non-None keyword values applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


def load_settings(dotenv_path: Optional[str] = None) -> Settings:
    """Build settings from ``.env`` and the environment.

    Args:
        dotenv_path: Explicit ``.env`` file. If None, python-dotenv searches
            upward from the working directory.

    Returns:
        A populated Settings instance.

    Raises:
        ConfigError: If a numeric variable is malformed.
    """
    load_dotenv(dotenv_path=dotenv_path, override=False)

    fixtures = os.getenv("VHK_FIXTURES")
    return Settings(
        fixtures_dir=Path(fixtures) if fixtures else BUNDLED_FIXTURES,
        report_db=os.getenv("VHK_REPORT_DB") or Settings.report_db,
        decide_bound=_int_from_env("VHK_DECIDE_BOUND", Settings.decide_bound),
        reduction_bound=_int_from_env("VHK_REDUCTION_BOUND", Settings.reduction_bound),
        log_level=(os.getenv("VHK_LOG_LEVEL") or Settings.log_level).upper(),
    )
