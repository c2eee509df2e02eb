"""Certificate pipelines for the 3-fold and 5-fold cyclic covers.

A pipeline lifts a twist-knot splitting to the cover, searches the lifted
tunnel-disk boundaries for a weak reduction, cuts along it and asks the
Whitehead decision whether what is left meets every disk (side a). Side (b)
words come from a fixture or the caller and go through the same decision.
Every step is recorded in a CertificateReport.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from src.config.settings import BUNDLED_FIXTURES
from src.splittings.reduction import (
    DEFAULT_REDUCTION_BOUND,
    cut_along,
    find_weak_reduction,
    omit_and_cut,
)
from src.splittings.splitting import CoverSide, SlopeParam, build_cover_side, twist_family
from src.utils.errors import FixtureError, ReportFormatError, UnsupportedCoverError, VhkError
from src.whitehead.decision import (
    DEFAULT_BOUND,
    DecisionResult,
    OmissionWitness,
    Verdict,
    decide_separable,
    omission_search,
)
from src.whitehead.graph import build_graph
from src.words.alphabet import Alphabet
from src.words.parser import parse_cyclic
from src.words.word import CyclicWord, Word, substitute

from .fixture import Fixture, find_fixture
from .report import CertificateReport, Step

logger = logging.getLogger(__name__)

DEFAULT_SLOPE = SlopeParam(2, 1)
THEOREM_COVERS = {1: 3, 3: 5}
SIDE_B_FIXTURES = {1: "fig12", 3: "fig18"}

UNAVAILABLE = "Unavailable"
SKIPPED = "Skipped"


@dataclass
class CertifyOptions:
    """Knobs shared by both pipelines.

    Attributes:
        fixtures_dir: Directory the side-(b) fixture is read from.
        side_b_words: Caller-supplied side-(b) words over the fixture alphabet;
            replaces the fixture words when given.
        withhold_side_b: Run without side-(b) words.
        decide_bound: State bound for every decision.
        reduction_bound: Move bound for omission searches.
        jobs: Worker threads for the pair search; output does not depend on it.
    """

    fixtures_dir: Path = BUNDLED_FIXTURES
    side_b_words: Optional[List[str]] = None
    withhold_side_b: bool = False
    decide_bound: int = DEFAULT_BOUND
    reduction_bound: int = DEFAULT_REDUCTION_BOUND
    jobs: int = 1

    def request_echo(self) -> Dict:
        return {
            "fixtures": None if Path(self.fixtures_dir) == BUNDLED_FIXTURES else str(self.fixtures_dir),
            "side_b_words": list(self.side_b_words) if self.side_b_words is not None else None,
            "withhold_side_b": self.withhold_side_b,
            "decide_bound": self.decide_bound,
            "reduction_bound": self.reduction_bound,
        }

    @classmethod
    def from_request(cls, request: Dict) -> "CertifyOptions":
        fixtures = request.get("fixtures")
        return cls(
            fixtures_dir=Path(fixtures) if fixtures else BUNDLED_FIXTURES,
            side_b_words=request.get("side_b_words"),
            withhold_side_b=bool(request.get("withhold_side_b", False)),
            decide_bound=int(request.get("decide_bound", DEFAULT_BOUND)),
            reduction_bound=int(request.get("reduction_bound", DEFAULT_REDUCTION_BOUND)),
        )


def _record_graph(report: CertificateReport, name: str, words: Sequence[CyclicWord], alphabet: Alphabet) -> None:
    graph = build_graph(list(words), alphabet)
    report.graphs[name] = {"dot": graph.to_dot(name), "json": graph.to_json()}


def _decision_step(name: str, words: Sequence[CyclicWord], bound: int,
                   inputs: Dict) -> Tuple[Step, DecisionResult]:
    result = decide_separable(words, bound=bound)
    step = Step(
        name=name,
        inputs=inputs,
        outputs=result.to_dict(),
        verdict=result.verdict.value,
        passed=result.is_diskbusting,
        required=True,
    )
    logger.info("%s: %s after %d moves", name, result.verdict.value, len(result.trace))
    return step, result


def _start_report(theorem: int, n: int, slope: SlopeParam, options: CertifyOptions) -> CertificateReport:
    request = {
        "theorem": theorem,
        "family": "twist",
        "n": n,
        "cover": THEOREM_COVERS[theorem],
        "slope": str(slope),
    }
    request.update(options.request_echo())
    report = CertificateReport(request=request)
    if slope != DEFAULT_SLOPE:
        report.add_caveat(f"slope {slope} differs from 2/1; the side-(b) fixture describes the slope-2 filling")
    if slope.q > 1:
        report.add_caveat("slope words for q > 1 are read as longitude^q * meridian^p")
    return report


def _cover_steps(report: CertificateReport, n: int, modulus: int, slope: SlopeParam) -> CoverSide:
    spec = twist_family(n)
    report.add_step(Step(
        name="splitting",
        inputs={"family": "twist", "n": n},
        outputs=spec.to_dict(),
        verdict="Valid",
    ))
    side = build_cover_side(spec, modulus, slope)
    report.add_step(Step(
        name="cover",
        inputs={"modulus": modulus, "slope": str(slope)},
        outputs=side.kernel_data.to_dict(),
        verdict=f"rank {side.kernel_data.kernel.rank}",
    ))
    report.add_step(Step(
        name="lift",
        inputs={"relator": str(spec.relator), "longitude": str(spec.longitude)},
        outputs=side.to_dict(),
        verdict=f"{len(side.relator_lifts)} lifts",
    ))
    return side


def _side_b_words(report: CertificateReport, theorem: int, n: int,
                  options: CertifyOptions) -> Optional[Tuple[Fixture, List[CyclicWord]]]:
    """Load side-(b) words; None when they are withheld or missing."""
    fixture_id = SIDE_B_FIXTURES[theorem]
    if options.withhold_side_b:
        report.add_caveat("side-(b) words unavailable")
        return None
    try:
        fixture = find_fixture(options.fixtures_dir, fixture_id)
    except FixtureError as exc:
        logger.warning("side-(b) fixture %s: %s", fixture_id, exc)
        report.add_caveat("side-(b) words unavailable")
        return None
    if options.side_b_words is not None:
        words = [parse_cyclic(text, fixture.alphabet) for text in options.side_b_words]
        report.add_caveat("side-(b) words supplied by the caller")
    else:
        words = list(fixture.words)
        report.add_caveat(f"side-(b) words come from the reconstructed fixture {fixture_id}, "
                          "not from the splitting itself")
        if n > 1:
            report.add_caveat(f"side (b) reuses the n=1 fixture {fixture_id} for n={n}; "
                              "its graph is the same for every n")
    return fixture, words


def _unavailable_step(name: str) -> Step:
    return Step(name=name, verdict=UNAVAILABLE, passed=False, required=True)


def _longitude_step(side: CoverSide, stages: Sequence[Tuple[Dict[int, Word], int]]) -> Step:
    """Word-level check that the lifted longitude misses every cut letter.

    Each stage is a basis change and the letter it frees; the longitude is
    carried through the stages and cut after each one.
    """
    if not stages:
        return Step(name="longitude_check", verdict=SKIPPED, passed=False)
    current = side.longitude_lift
    cuts: List[str] = []
    for images, omitted in stages:
        alphabet = current.alphabet
        moved = CyclicWord.of(substitute(current, images))
        cuts.append(alphabet.names[omitted])
        if not moved.omits(omitted):
            break
        current = cut_along([moved], omitted)[0]
    passed = moved.omits(omitted)
    return Step(
        name="longitude_check",
        inputs={"longitude_lift": str(side.longitude_lift), "omitted": cuts},
        outputs={"moved": str(moved)},
        verdict="Disjoint" if passed else "Meets",
        passed=passed,
    )


def certify_theorem1(n: int, slope: SlopeParam = DEFAULT_SLOPE,
                     options: Optional[CertifyOptions] = None) -> CertificateReport:
    """Certify the 3-fold cover of the n-th twist knot exterior.

    Steps: splitting, cover, lift, weak_reduction, side_a, side_b and the
    informational longitude_check. Negative outcomes are recorded in the
    report and never raised.

    Args:
        n: Twist parameter, n ≥ 1.
        slope: Upstairs filling slope.
        options: Fixture location, bounds and side-(b) overrides.

    Returns:
        The report; ``report.certified`` is the overall result.
    """
    options = options or CertifyOptions()
    report = _start_report(1, n, slope, options)
    side = _cover_steps(report, n, 3, slope)
    kernel = side.kernel_data.kernel
    relator_lifts = list(side.relator_lifts)

    reduction = find_weak_reduction(relator_lifts, bound=options.reduction_bound)
    report.add_step(Step(
        name="weak_reduction",
        inputs={"disk_words": [str(w) for w in relator_lifts], "bound": options.reduction_bound},
        outputs=reduction.to_dict(),
        verdict="Found" if reduction.found else "NotFound",
        passed=reduction.found,
        required=True,
    ))

    if reduction.found:
        cut = cut_along([reduction.word], reduction.omitted)
        step, _ = _decision_step("side_a", cut, options.decide_bound, {
            "disk_index": reduction.disk_index,
            "cut_generator": kernel.names[reduction.omitted],
            "words": [str(w) for w in cut],
            "alphabet": cut[0].alphabet.to_list(),
        })
        report.add_step(step)
        _record_graph(report, "side_a", cut, cut[0].alphabet)
    else:
        report.add_step(Step(name="side_a", verdict=Verdict.INCONCLUSIVE.value, passed=False, required=True))

    loaded = _side_b_words(report, 1, n, options)
    if loaded is None:
        report.add_step(_unavailable_step("side_b"))
    else:
        fixture, words = loaded
        step, _ = _decision_step("side_b", words, options.decide_bound, {
            "fixture": fixture.id,
            "words": [str(w) for w in words],
            "alphabet": fixture.alphabet.to_list(),
        })
        report.add_step(step)
        _record_graph(report, "side_b", words, fixture.alphabet)

    if reduction.found:
        report.add_step(_longitude_step(side, [(reduction.basis_change, reduction.omitted)]))
    else:
        report.add_step(_longitude_step(side, []))

    logger.info("theorem 1, n=%d: certified=%s", n, report.certified)
    return report


@dataclass
class PairOutcome:
    """Result of reducing one pair of relator lifts down to rank four."""

    pair: Tuple[int, int]
    words: List[CyclicWord] = field(default_factory=list)
    cuts: List[str] = field(default_factory=list)
    witnesses: List[OmissionWitness] = field(default_factory=list)
    decision: Optional[DecisionResult] = None

    @property
    def reduced(self) -> bool:
        return bool(self.words)

    @property
    def diskbusting(self) -> bool:
        return self.decision is not None and self.decision.is_diskbusting

    def stages(self) -> List[Tuple[Dict[int, Word], int]]:
        return [(w.images, w.omitted) for w in self.witnesses]

    def to_dict(self) -> Dict:
        return {
            "pair": list(self.pair),
            "reduced": self.reduced,
            "cuts": self.cuts,
            "words": [str(w) for w in self.words],
            "verdict": self.decision.verdict.value if self.decision else None,
        }


def _reduce_pair(lifts: List[CyclicWord], pair: Tuple[int, int], options: CertifyOptions) -> PairOutcome:
    outcome = PairOutcome(pair)
    words = [lifts[pair[0]], lifts[pair[1]]]
    for _ in range(2):
        alphabet = words[0].alphabet
        words, witness = omit_and_cut(words, bound=options.reduction_bound)
        if witness is None:
            return outcome
        outcome.cuts.append(alphabet.names[witness.omitted])
        outcome.witnesses.append(witness)
    outcome.words = words
    outcome.decision = decide_separable(words, bound=options.decide_bound)
    return outcome


def _individual_step(name: str, words: Sequence[CyclicWord], options: CertifyOptions) -> Step:
    """Every word on its own must miss a disk, each a different one."""
    alphabet = words[0].alphabet
    witnesses = []
    used: List[int] = []
    found_all = True
    for word in words:
        found = omission_search([word], bound=options.reduction_bound)
        if found is not None and found.omitted in used:
            scope = [g for g in range(alphabet.rank) if g not in used]
            retry = omission_search([word], bound=options.reduction_bound, scope=scope) if scope else None
            found = retry or found
        if found is None:
            found_all = False
            witnesses.append({"word": str(word), "omitted": None})
            continue
        used.append(found.omitted)
        witnesses.append({
            "word": str(word),
            "omitted": alphabet.names[found.omitted],
            "moves": [m.format(alphabet) for m in found.moves],
        })
    distinct = found_all and len(set(used)) == len(used)
    return Step(
        name=name,
        inputs={"words": [str(w) for w in words]},
        outputs={"witnesses": witnesses, "distinct": distinct},
        verdict=Verdict.SEPARABLE.value if found_all else Verdict.DISKBUSTING.value,
        passed=distinct,
        required=True,
    )


def certify_theorem3(n: int, slope: SlopeParam = DEFAULT_SLOPE,
                     options: Optional[CertifyOptions] = None) -> CertificateReport:
    """Certify the 5-fold cover of the n-th twist knot exterior.

    Two lifted disks are cut away per side. Pairs of relator lifts are tried
    in order; the first pair whose reduced union is diskbusting is used.
    Each of the two words must still miss a disk on its own, and the two
    missed disks must differ. The informational longitude_check carries the
    lifted longitude through both basis changes of the chosen pair.
    """
    options = options or CertifyOptions()
    report = _start_report(3, n, slope, options)
    side = _cover_steps(report, n, 5, slope)
    lifts = list(side.relator_lifts)

    pairs = list(combinations(range(len(lifts)), 2))
    if options.jobs > 1:
        with ThreadPoolExecutor(max_workers=options.jobs) as pool:
            outcomes = list(pool.map(lambda p: _reduce_pair(lifts, p, options), pairs))
    else:
        outcomes = [_reduce_pair(lifts, p, options) for p in pairs]
    chosen = next((o for o in outcomes if o.diskbusting), None)

    report.add_step(Step(
        name="pair_reduction",
        inputs={"disk_words": [str(w) for w in lifts], "bound": options.reduction_bound},
        outputs={
            "pairs": [o.to_dict() for o in outcomes],
            "chosen": list(chosen.pair) if chosen else None,
        },
        verdict="Found" if chosen else "NotFound",
        passed=chosen is not None,
        required=True,
    ))

    if chosen is not None:
        alphabet = chosen.words[0].alphabet
        report.add_step(Step(
            name="side_a",
            inputs={"pair": list(chosen.pair), "cuts": chosen.cuts,
                    "words": [str(w) for w in chosen.words], "alphabet": alphabet.to_list()},
            outputs=chosen.decision.to_dict(),
            verdict=chosen.decision.verdict.value,
            passed=True,
            required=True,
        ))
        _record_graph(report, "side_a", chosen.words, alphabet)
        report.add_step(_individual_step("side_a_individual", chosen.words, options))
    else:
        report.add_step(Step(name="side_a", verdict=Verdict.INCONCLUSIVE.value, passed=False, required=True))

    loaded = _side_b_words(report, 3, n, options)
    if loaded is None:
        report.add_step(_unavailable_step("side_b"))
    else:
        fixture, words = loaded
        step, result = _decision_step("side_b", words, options.decide_bound, {
            "fixture": fixture.id,
            "words": [str(w) for w in words],
            "alphabet": fixture.alphabet.to_list(),
        })
        if result.is_diskbusting and not result.trace and options.side_b_words is None:
            # fig18 has cut vertices, so a verdict without moves means the fixture changed.
            step.passed = False
        if options.side_b_words is None and len(result.trace) > 2:
            report.add_caveat(
                f"side-(b) descent took {len(result.trace)} smallest-branch moves; "
                "merging all branches at each cut vertex gives the two-move chain fig18, fig19a, fig19b"
            )
        report.add_step(step)
        _record_graph(report, "side_b", words, fixture.alphabet)
        if result.trace:
            _record_graph(report, "side_b_final", result.words, fixture.alphabet)
        report.add_step(_individual_step("side_b_individual", words, options))

    report.add_step(_longitude_step(side, chosen.stages() if chosen else []))

    logger.info("theorem 3, n=%d: certified=%s", n, report.certified)
    return report


def certify(theorem: int, n: int, slope: SlopeParam = DEFAULT_SLOPE,
            options: Optional[CertifyOptions] = None) -> CertificateReport:
    if theorem == 1:
        return certify_theorem1(n, slope, options)
    if theorem == 3:
        return certify_theorem3(n, slope, options)
    raise UnsupportedCoverError(f"No certificate pipeline for theorem {theorem}")


def theorem_for_cover(modulus: int) -> int:
    """Theorem number whose pipeline runs on the m-fold cover."""
    for theorem, cover in THEOREM_COVERS.items():
        if cover == modulus:
            return theorem
    raise UnsupportedCoverError(f"No certificate pipeline for the {modulus}-fold cover; use 3 or 5")


def replay_report(report_dict: Dict) -> bool:
    """Re-run the request echoed in a report and compare step verdicts.

    Returns:
        True when every step reproduces its recorded verdict and the
        certified flag matches.

    Raises:
        ReportFormatError: If the report does not carry a usable request.
    """
    recorded = CertificateReport.from_dict(report_dict)
    request = recorded.request
    try:
        theorem = int(request["theorem"])
        n = int(request["n"])
        slope = SlopeParam.parse(request["slope"])
    except (KeyError, TypeError, ValueError, VhkError) as exc:
        raise ReportFormatError(f"Report request cannot be replayed: {exc}") from exc
    fresh = certify(theorem, n, slope, CertifyOptions.from_request(request))
    same = fresh.verdicts() == recorded.verdicts()
    certified = report_dict.get("overall", {}).get("certified")
    if certified is not None and certified != fresh.certified:
        same = False
    logger.info("replay theorem %d, n=%d: %s", theorem, n, "reproduced" if same else "differs")
    return same
