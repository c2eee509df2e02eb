"""Tests for certificate report serialization."""

import io
import json
import unittest
import zipfile

from src.certify import ArchivedReport, CertificateReport, Step, emit_report
from src.utils.errors import ReportFormatError


def sample_report():
    report = CertificateReport(request={"theorem": 1, "family": "twist", "n": 1, "cover": 3, "slope": "2/1"})
    report.add_step(Step("splitting", verdict="Valid"))
    report.add_step(Step("side_a", verdict="Diskbusting", required=True))
    report.add_step(Step("side_b", verdict="Diskbusting", required=True))
    report.add_step(Step("longitude_check", verdict="Meets", passed=False))
    report.graphs["side_a"] = {"dot": 'graph "side_a" {\n}\n', "json": {}}
    report.graphs["side_b"] = {"dot": 'graph "side_b" {\n}\n', "json": {}}
    report.add_caveat("side-(b) words supplied by the caller")
    return report


class TestCertificateReport(unittest.TestCase):
    """The certified flag and the dict form."""

    def test_certified_needs_required_steps(self):
        self.assertFalse(CertificateReport().certified)
        report = CertificateReport()
        report.add_step(Step("splitting", verdict="Valid"))
        self.assertFalse(report.certified)

    def test_informational_failure_does_not_block(self):
        self.assertTrue(sample_report().certified)

    def test_required_failure_blocks(self):
        report = sample_report()
        report.step("side_a").passed = False
        self.assertFalse(report.certified)

    def test_caveats_deduplicate(self):
        report = sample_report()
        report.add_caveat("side-(b) words supplied by the caller")
        self.assertEqual(len(report.caveats), 1)

    def test_dict_round_trip(self):
        report = sample_report()
        again = CertificateReport.from_dict(report.to_dict())
        self.assertEqual(again.verdicts(), report.verdicts())
        self.assertEqual(again.certified, report.certified)
        self.assertEqual(again.caveats, report.caveats)

    def test_unknown_schema(self):
        data = sample_report().to_dict()
        data["schema"] = 2
        with self.assertRaises(ReportFormatError):
            CertificateReport.from_dict(data)


class TestEmitReport(unittest.TestCase):
    """json, text and dot-bundle output."""

    def test_json(self):
        data = json.loads(emit_report(sample_report(), "json"))
        self.assertEqual(data["schema"], 1)
        self.assertTrue(data["overall"]["certified"])
        self.assertEqual([s["name"] for s in data["steps"]][:2], ["splitting", "side_a"])

    def test_text(self):
        lines = emit_report(sample_report(), "text").decode("utf-8").splitlines()
        self.assertEqual(lines[0], "certificate theorem=1 family=twist n=1 cover=3 slope=2/1")
        self.assertIn("step side_a: Diskbusting [required, ok]", lines)
        self.assertIn("step longitude_check: Meets [info, FAILED]", lines)
        self.assertIn("certified: yes", lines)
        self.assertEqual(lines[-1], "caveat: side-(b) words supplied by the caller")

    def test_dot_bundle(self):
        payload = emit_report(sample_report(), "dot-bundle")
        with zipfile.ZipFile(io.BytesIO(payload)) as bundle:
            self.assertEqual(bundle.namelist(), ["side_a.dot", "side_b.dot"])
            self.assertTrue(bundle.read("side_a.dot").startswith(b'graph "side_a"'))
        self.assertEqual(payload, emit_report(sample_report(), "dot-bundle"))

    def test_unknown_format(self):
        with self.assertRaises(ReportFormatError):
            emit_report(sample_report(), "yaml")


class TestArchivedReport(unittest.TestCase):
    """Archive records built from reports."""

    def test_from_report(self):
        archived = ArchivedReport.from_report(sample_report())
        self.assertEqual((archived.theorem, archived.n, archived.cover, archived.slope), (1, 1, 3, "2/1"))
        self.assertTrue(archived.certified)
        self.assertIsNotNone(archived.created_at)
        self.assertEqual(archived.to_report().verdicts(), sample_report().verdicts())

    def test_dict_round_trip(self):
        archived = ArchivedReport.from_report(sample_report())
        again = ArchivedReport.from_dict(archived.to_dict())
        self.assertEqual(again.created_at, archived.created_at)
        self.assertEqual(again.report, archived.report)


if __name__ == "__main__":
    unittest.main()
