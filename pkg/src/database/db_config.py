"""Database path management for the report archive.

The path comes from settings (VHK_REPORT_DB) and the file is created only when
a repository first asks for it.
"""

import logging
import os
from pathlib import Path
from typing import Optional

from src.config.settings import load_settings

logger = logging.getLogger(__name__)


class DatabaseConfig:
    """Report archive location.

    Ensures the database directory and file exist. Tables are created by the
    repository classes.

    Attributes:
        db_path: Path to the SQLite database file.

    Example:
        >>> from src.database.db_config import get_database_path
        >>> db_path = get_database_path()
    """

    def __init__(self, db_path: Optional[str] = None):
        if db_path is None:
            db_path = load_settings().report_db
        self.db_path = db_path
        self._ensure_database_exists()

    def _ensure_database_exists(self):
        db_dir = os.path.dirname(self.db_path)
        if db_dir and not os.path.exists(db_dir):
            os.makedirs(db_dir, exist_ok=True)
            logger.info("created report directory %s", db_dir)
        if not os.path.exists(self.db_path):
            Path(self.db_path).touch()
            logger.info("created report database %s", self.db_path)

    def get_path(self) -> str:
        return self.db_path


_db_config: Optional[DatabaseConfig] = None


def get_database_path() -> str:
    """Configured database path; the file is created on first use."""
    global _db_config
    if _db_config is None:
        _db_config = DatabaseConfig()
    return _db_config.get_path()


def set_database_path(db_path: str):
    """Use a custom database path from now on."""
    global _db_config
    _db_config = DatabaseConfig(db_path)
