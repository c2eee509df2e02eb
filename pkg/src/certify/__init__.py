"""Certificate pipelines, figure fixtures and reports."""

from src.certify.archive import ArchivedReport
from src.certify.fixture import Fixture, FixtureCheck, find_fixture, list_fixtures, load_fixture, verify_fixture
from src.certify.pipeline import (
    CertifyOptions,
    certify,
    certify_theorem1,
    certify_theorem3,
    replay_report,
    theorem_for_cover,
)
from src.certify.report import FORMATS, CertificateReport, Step, emit_report

__all__ = [
    "ArchivedReport",
    "CertificateReport",
    "CertifyOptions",
    "FORMATS",
    "Fixture",
    "FixtureCheck",
    "Step",
    "certify",
    "certify_theorem1",
    "certify_theorem3",
    "emit_report",
    "find_fixture",
    "list_fixtures",
    "load_fixture",
    "replay_report",
    "theorem_for_cover",
    "verify_fixture",
]
