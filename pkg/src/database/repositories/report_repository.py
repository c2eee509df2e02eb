"""Repository for archived certificate reports."""

import json
import sqlite3
from datetime import datetime
from typing import List, Optional

from src.certify.archive import ArchivedReport
from src.database.db_config import get_database_path


class ReportRepository:
    """CRUD operations for archived reports with SQLite.

    Attributes:
        db_path: Path to the SQLite database file.

    Example:
        >>> repo = ReportRepository()
        >>> saved = repo.create(ArchivedReport.from_report(report))
        >>> recent = repo.list_recent(limit=5)
    """

    def __init__(self, db_path: Optional[str] = None):
        self.db_path = db_path or get_database_path()
        self._init_db()

    def _init_db(self):
        """Create the reports table if it doesn't exist."""
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()
            cursor.execute("""
                CREATE TABLE IF NOT EXISTS reports (
                    id INTEGER PRIMARY KEY AUTOINCREMENT,
                    theorem INTEGER NOT NULL,
                    n INTEGER NOT NULL,
                    cover INTEGER NOT NULL,
                    slope TEXT NOT NULL,
                    certified INTEGER NOT NULL,
                    report_data TEXT NOT NULL,
                    created_at TEXT NOT NULL
                )
            """)
            cursor.execute("""
                CREATE INDEX IF NOT EXISTS idx_reports_created
                ON reports(created_at DESC)
            """)
            conn.commit()

    def create(self, archived: ArchivedReport) -> ArchivedReport:
        """Store a report.

        Returns:
            The archived report with id populated.
        """
        if not archived.created_at:
            archived.created_at = datetime.now()

        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()
            cursor.execute("""
                INSERT INTO reports
                (theorem, n, cover, slope, certified, report_data, created_at)
                VALUES (?, ?, ?, ?, ?, ?, ?)
            """, (
                archived.theorem,
                archived.n,
                archived.cover,
                archived.slope,
                1 if archived.certified else 0,
                json.dumps(archived.report, sort_keys=True),
                archived.created_at.isoformat(),
            ))
            archived.id = cursor.lastrowid
            conn.commit()
        return archived

    save = create

    def get_by_id(self, report_id: int) -> Optional[ArchivedReport]:
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()
            cursor.execute("""
                SELECT id, theorem, n, cover, slope, certified, report_data, created_at
                FROM reports
                WHERE id = ?
            """, (report_id,))
            row = cursor.fetchone()
            if row:
                return self._row_to_report(row)
        return None

    def list_recent(self, limit: int = 20, certified_only: bool = False) -> List[ArchivedReport]:
        """Most recent reports first."""
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()
            if certified_only:
                cursor.execute("""
                    SELECT id, theorem, n, cover, slope, certified, report_data, created_at
                    FROM reports
                    WHERE certified = 1
                    ORDER BY created_at DESC, id DESC
                    LIMIT ?
                """, (limit,))
            else:
                cursor.execute("""
                    SELECT id, theorem, n, cover, slope, certified, report_data, created_at
                    FROM reports
                    ORDER BY created_at DESC, id DESC
                    LIMIT ?
                """, (limit,))
            return [self._row_to_report(row) for row in cursor.fetchall()]

    def delete(self, report_id: int) -> bool:
        """Delete a report.

        Returns:
            True if a row was removed.
        """
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()
            cursor.execute("DELETE FROM reports WHERE id = ?", (report_id,))
            conn.commit()
            return cursor.rowcount > 0

    def _row_to_report(self, row) -> ArchivedReport:
        return ArchivedReport(
            id=row[0],
            theorem=row[1],
            n=row[2],
            cover=row[3],
            slope=row[4],
            certified=bool(row[5]),
            report=json.loads(row[6]),
            created_at=datetime.fromisoformat(row[7]),
        )
