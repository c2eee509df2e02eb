"""Certificate reports and their serializations."""

import io
import json
import zipfile
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.utils.errors import ReportFormatError

SCHEMA_VERSION = 1
FORMATS = ("json", "text", "dot-bundle")

# Fixed timestamp keeps dot bundles byte-identical across runs.
_ZIP_TIME = (1980, 1, 1, 0, 0, 0)


@dataclass
class Step:
    """One pipeline step.

    Attributes:
        name: Step identifier, e.g. ``side_a``.
        inputs: What the step consumed.
        outputs: What the step produced.
        verdict: Short outcome string such as ``Diskbusting`` or ``Found``.
        passed: Whether the outcome is the one the certificate needs.
        required: Whether ``passed`` gates the overall result.
    """

    name: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    outputs: Dict[str, Any] = field(default_factory=dict)
    verdict: str = ""
    passed: bool = True
    required: bool = False

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "verdict": self.verdict,
            "passed": self.passed,
            "required": self.required,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "Step":
        return cls(
            name=data["name"],
            inputs=data.get("inputs", {}),
            outputs=data.get("outputs", {}),
            verdict=data.get("verdict", ""),
            passed=data.get("passed", True),
            required=data.get("required", False),
        )


@dataclass
class CertificateReport:
    """Structured record of a certificate run.

    ``certified`` is derived: it holds only when every required step passed.

    Attributes:
        request: Echo of the request, enough to replay the run.
        steps: Steps in execution order.
        graphs: Recorded graphs by name, each with ``dot`` and ``json``.
        caveats: Standing remarks on provenance and conventions.

    Example:
        >>> report = CertificateReport(request={"theorem": 1})
        >>> report.add_step(Step("side_a", verdict="Diskbusting", required=True))
        >>> report.certified
        True
    """

    request: Dict[str, Any] = field(default_factory=dict)
    steps: List[Step] = field(default_factory=list)
    graphs: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    caveats: List[str] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        required = [s for s in self.steps if s.required]
        return bool(required) and all(s.passed for s in required)

    def add_step(self, step: Step) -> Step:
        self.steps.append(step)
        return step

    def add_caveat(self, caveat: str) -> None:
        if caveat not in self.caveats:
            self.caveats.append(caveat)

    def step(self, name: str) -> Optional[Step]:
        return next((s for s in self.steps if s.name == name), None)

    def verdicts(self) -> Dict[str, str]:
        return {s.name: s.verdict for s in self.steps}

    def to_dict(self) -> Dict:
        return {
            "schema": SCHEMA_VERSION,
            "request": self.request,
            "steps": [s.to_dict() for s in self.steps],
            "graphs": self.graphs,
            "overall": {"certified": self.certified, "caveats": list(self.caveats)},
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "CertificateReport":
        if data.get("schema") != SCHEMA_VERSION:
            raise ReportFormatError(f"Unsupported report schema {data.get('schema')!r}")
        return cls(
            request=data.get("request", {}),
            steps=[Step.from_dict(s) for s in data.get("steps", [])],
            graphs=data.get("graphs", {}),
            caveats=list(data.get("overall", {}).get("caveats", [])),
        )


def report_to_json(report: CertificateReport) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def report_to_text(report: CertificateReport) -> str:
    request = report.request
    lines = [
        f"certificate theorem={request.get('theorem')} family={request.get('family')} "
        f"n={request.get('n')} cover={request.get('cover')} slope={request.get('slope')}",
    ]
    for step in report.steps:
        flag = "required" if step.required else "info"
        status = "ok" if step.passed else "FAILED"
        lines.append(f"step {step.name}: {step.verdict} [{flag}, {status}]")
    lines.append(f"certified: {'yes' if report.certified else 'no'}")
    lines.extend(f"caveat: {c}" for c in report.caveats)
    return "\n".join(lines) + "\n"


def report_to_dot_bundle(report: CertificateReport) -> bytes:
    """Zip archive with one ``<graph>.dot`` file per recorded graph."""
    buffer = io.BytesIO()
    with zipfile.ZipFile(buffer, "w", zipfile.ZIP_DEFLATED) as bundle:
        for name in sorted(report.graphs):
            info = zipfile.ZipInfo(f"{name}.dot", date_time=_ZIP_TIME)
            info.compress_type = zipfile.ZIP_DEFLATED
            bundle.writestr(info, report.graphs[name]["dot"])
    return buffer.getvalue()


def emit_report(report: CertificateReport, fmt: str = "json") -> bytes:
    """Serialize a report deterministically.

    Args:
        report: The report.
        fmt: ``json``, ``text`` or ``dot-bundle``.

    Returns:
        UTF-8 bytes for json and text, zip bytes for dot-bundle.

    Raises:
        ReportFormatError: On an unknown format.
    """
    if fmt == "json":
        return report_to_json(report).encode("utf-8")
    if fmt == "text":
        return report_to_text(report).encode("utf-8")
    if fmt == "dot-bundle":
        return report_to_dot_bundle(report)
    raise ReportFormatError(f"Unknown report format {fmt!r}; expected one of {', '.join(FORMATS)}")
