"""Command-line interface for lifting, Whitehead graphs, decisions and certificates.

Exit codes: 0 on success, 1 on a valid but negative result (Separable where
Diskbusting was expected, Inconclusive, not certified, fixture mismatch), 2
on usage or input errors. stdout carries only the result; diagnostics go to
stderr.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, Optional, Sequence

from pydantic import ValidationError

from src.certify.archive import ArchivedReport
from src.certify.fixture import list_fixtures, verify_fixture
from src.certify.pipeline import CertifyOptions, certify, theorem_for_cover
from src.certify.report import emit_report
from src.config.settings import Settings, load_settings
from src.database.repositories.report_repository import ReportRepository
from src.splittings.splitting import SlopeParam, build_cover_side, lift_slope, load_splitting, twist_family
from src.utils.errors import VhkError
from src.utils.log_config import configure_logging
from src.whitehead.decision import Verdict, decide_separable
from src.whitehead.graph import build_graph
from src.whitehead.moves import parse_move
from src.whitehead.trace import MoveTrace
from src.words.alphabet import Alphabet, parse_alphabet
from src.words.parser import parse_cyclic

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as exit code 2 without exiting the process."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must not be negative, got {value}")
    return value


def _add_words_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alphabet", required=True, help="Comma-separated generator names, e.g. x,y")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--words", nargs="+", help="Cyclic words in the word text format")
    source.add_argument("--words-file", help="File with one cyclic word per line")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vhk", description="Whitehead graphs, cyclic covers and certificates for twist knots.")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log to stderr; repeat for debug output")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="Write the result to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    lift = sub.add_parser("lift", parents=[common], help="Lift a splitting to the m-fold cyclic cover")
    spec_source = lift.add_mutually_exclusive_group(required=True)
    spec_source.add_argument("--spec", help="Splitting JSON file")
    spec_source.add_argument("--family", choices=["twist"], help="Built-in family")
    lift.add_argument("--n", type=_positive_int, default=1, help="Family parameter (with --family)")
    lift.add_argument("--cover", type=_positive_int, required=True, help="Cover degree m")
    lift.add_argument("--slope", help="Downstairs filling slope P/Q; m must divide P")

    graph = sub.add_parser("graph", parents=[common], help="Whitehead graph of a word system")
    _add_words_args(graph)
    graph.add_argument("--format", choices=["json", "dot"], default="json")

    decide = sub.add_parser("decide", parents=[common], help="Decide whether a word system is diskbusting")
    _add_words_args(decide)
    decide.add_argument("--bound", type=_positive_int, help="State bound (default VHK_DECIDE_BOUND)")
    decide.add_argument("--expect", choices=[v.value for v in Verdict],
                        help="Exit 1 unless the verdict matches")

    moves = sub.add_parser("moves", parents=[common], help="Apply Whitehead moves to a word system")
    _add_words_args(moves)
    moves.add_argument("--move", action="append", required=True,
                       help='Move as "({x,Y},x)" or "I(y,X)"; repeat to compose in order')
    moves.add_argument("--rollback", type=_non_negative_int, default=0, help="Undo the last K moves afterwards")

    cert = sub.add_parser("certify", parents=[common], help="Run a certificate pipeline")
    cert.add_argument("--family", choices=["twist"], default="twist")
    cert.add_argument("--n", type=_positive_int, required=True, help="Twist parameter, n >= 1")
    cert.add_argument("--cover", type=int, choices=[3, 5], required=True, help="3 or 5")
    cert.add_argument("--slope", default="2/1", help="Upstairs filling slope P/Q (default 2/1)")
    cert.add_argument("--fixtures", help="Fixture directory (default VHK_FIXTURES or bundled)")
    cert.add_argument("--jobs", type=_positive_int, default=1, help="Worker threads for the pair search")
    cert.add_argument("--archive", action="store_true", help="Store the JSON report in the report archive")
    cert.add_argument("--format", choices=["json", "text", "dot-bundle"], default="json")

    fixtures = sub.add_parser("fixtures", parents=[common], help="Verify the figure fixtures")
    fixtures.add_argument("--fixtures", help="Fixture directory (default VHK_FIXTURES or bundled)")
    return parser


def _read_words(args, alphabet: Alphabet):
    if args.words_file:
        lines = Path(args.words_file).read_text(encoding="utf-8").splitlines()
        texts = [line.strip() for line in lines if line.strip() and not line.lstrip().startswith("#")]
    else:
        texts = args.words
    return [parse_cyclic(text, alphabet) for text in texts]


def _dump(data: Dict) -> bytes:
    return (json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _cmd_lift(args, settings: Settings):
    spec = load_splitting(args.spec) if args.spec else twist_family(args.n)
    upstairs = lift_slope(args.cover, SlopeParam.parse(args.slope)) if args.slope else None
    side = build_cover_side(spec, args.cover, upstairs)
    data = side.to_dict()
    data["splitting"] = spec.to_dict()
    data["downstairs_slope"] = str(SlopeParam.parse(args.slope)) if args.slope else None
    data["upstairs_slope"] = str(upstairs) if upstairs else None
    return _dump(data), EXIT_OK


def _cmd_graph(args, settings: Settings):
    alphabet = parse_alphabet(args.alphabet)
    graph = build_graph(_read_words(args, alphabet), alphabet)
    if args.format == "dot":
        return graph.to_dot().encode("utf-8"), EXIT_OK
    return _dump(graph.to_json()), EXIT_OK


def _cmd_decide(args, settings: Settings):
    alphabet = parse_alphabet(args.alphabet)
    bound = args.bound if args.bound is not None else settings.decide_bound
    result = decide_separable(_read_words(args, alphabet), bound=bound)
    code = EXIT_OK
    if result.verdict == Verdict.INCONCLUSIVE:
        code = EXIT_NEGATIVE
    if args.expect and result.verdict.value != args.expect:
        logger.warning("expected %s, got %s", args.expect, result.verdict.value)
        code = EXIT_NEGATIVE
    return _dump(result.to_dict()), code


def _cmd_moves(args, settings: Settings):
    alphabet = parse_alphabet(args.alphabet)
    words = _read_words(args, alphabet)
    trace = MoveTrace(alphabet)
    current = words
    for text in args.move:
        current = trace.apply(parse_move(text, alphabet), current)
    rolled = trace.rollback(args.rollback) if args.rollback else []
    final = trace.current() or tuple(words)
    data = {
        "input": [str(w) for w in words],
        "steps": trace.to_list(),
        "rolled_back": [{"move": r.move.format(alphabet), "restored": r.restored} for r in rolled],
        "words": [str(w) for w in final],
    }
    code = EXIT_OK if all(r.restored for r in rolled) else EXIT_NEGATIVE
    return _dump(data), code


def _cmd_certify(args, settings: Settings):
    if args.format == "dot-bundle" and not args.output:
        raise _UsageError("--format dot-bundle writes a zip archive and needs --output")
    theorem = theorem_for_cover(args.cover)
    options = CertifyOptions(
        fixtures_dir=Path(args.fixtures) if args.fixtures else settings.fixtures_dir,
        decide_bound=settings.decide_bound,
        reduction_bound=settings.reduction_bound,
        jobs=args.jobs,
    )
    report = certify(theorem, args.n, SlopeParam.parse(args.slope), options)
    if args.archive:
        saved = ReportRepository(settings.report_db).create(ArchivedReport.from_report(report))
        logger.info("archived report %d in %s", saved.id, settings.report_db)
    return emit_report(report, args.format), EXIT_OK if report.certified else EXIT_NEGATIVE


def _cmd_fixtures(args, settings: Settings):
    directory = Path(args.fixtures) if args.fixtures else settings.fixtures_dir
    checks = [verify_fixture(f) for f in list_fixtures(directory)]
    data = {"fixtures": [c.to_dict() for c in checks], "all_match": all(c.matches_expected for c in checks)}
    return _dump(data), EXIT_OK if data["all_match"] else EXIT_NEGATIVE


COMMANDS = {
    "lift": _cmd_lift,
    "graph": _cmd_graph,
    "decide": _cmd_decide,
    "moves": _cmd_moves,
    "certify": _cmd_certify,
    "fixtures": _cmd_fixtures,
}


def _write(payload: bytes, output: Optional[str]) -> None:
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(payload)
        return
    stream = getattr(sys.stdout, "buffer", None)
    if stream is not None:
        stream.write(payload)
        stream.flush()
    else:
        sys.stdout.write(payload.decode("utf-8"))


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:].
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help exits through argparse.
        return exc.code if isinstance(exc.code, int) else EXIT_OK

    try:
        settings = load_settings()
        configure_logging(args.verbose, baseline=settings.log_level)
        payload, code = COMMANDS[args.command](args, settings)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (VhkError, ValidationError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write(payload, args.output)
    return code


def main():
    """Main entry point for the CLI application."""
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        print("\nInterrupted.", file=sys.stderr)
        sys.exit(130)


if __name__ == "__main__":
    main()
