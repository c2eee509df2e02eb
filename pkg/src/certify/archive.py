"""Archived certificate reports."""

from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, Optional

from .report import CertificateReport


@dataclass
class ArchivedReport:
    """A certificate report as stored in the report archive.

    Attributes:
        id: Row id, None until saved.
        theorem: Theorem the report certifies.
        n: Twist parameter.
        cover: Cover degree.
        slope: Upstairs slope text.
        certified: Overall result at the time of saving.
        report: The serialized report.
        created_at: When the report was archived.

    Example:
        >>> archived = ArchivedReport.from_report(certify_theorem1(1))
        >>> archived.certified
        True
    """

    id: Optional[int] = None
    theorem: int = 0
    n: int = 0
    cover: int = 0
    slope: str = ""
    certified: bool = False
    report: Dict[str, Any] = field(default_factory=dict)
    created_at: Optional[datetime] = None

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "theorem": self.theorem,
            "n": self.n,
            "cover": self.cover,
            "slope": self.slope,
            "certified": self.certified,
            "report": self.report,
            "created_at": self.created_at.isoformat() if self.created_at else None,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ArchivedReport":
        archived = cls(
            id=data.get("id"),
            theorem=data.get("theorem", 0),
            n=data.get("n", 0),
            cover=data.get("cover", 0),
            slope=data.get("slope", ""),
            certified=bool(data.get("certified", False)),
            report=data.get("report", {}),
        )
        if data.get("created_at"):
            archived.created_at = datetime.fromisoformat(data["created_at"])
        return archived

    @classmethod
    def from_report(cls, report: CertificateReport) -> "ArchivedReport":
        request = report.request
        return cls(
            theorem=int(request.get("theorem", 0)),
            n=int(request.get("n", 0)),
            cover=int(request.get("cover", 0)),
            slope=str(request.get("slope", "")),
            certified=report.certified,
            report=report.to_dict(),
            created_at=datetime.now(),
        )

    def to_report(self) -> CertificateReport:
        return CertificateReport.from_dict(self.report)
