"""Splitting descriptions, knot-family words and slope curves."""

import logging
from dataclasses import dataclass
from math import gcd
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from src.covers.schreier import Lifts, SchreierData, lifts_of, rewrite_in_kernel, schreier_basis
from src.covers.weights import WeightMap, infer_weights
from src.splittings.formulas import twist_longitude_text, twist_relator_text
from src.splittings.validators import validate_splitting
from src.utils.errors import ParseError, SlopeError, SpecValidationError
from src.words.alphabet import Alphabet
from src.words.parser import parse_word
from src.words.word import CyclicWord, Word

logger = logging.getLogger(__name__)

TWIST = "twist"
CUSTOM = "custom"


@dataclass(frozen=True)
class Family:
    name: str
    n: Optional[int] = None

    def to_dict(self) -> Dict:
        return {"name": self.name, "n": self.n}


@dataclass(frozen=True)
class SplittingSpec:
    """A genus-two splitting of a knot exterior, described by words.

    Attributes:
        name: Label used in reports.
        alphabet: Rank-2 alphabet of the handlebody side.
        relator: Boundary word of the tunnel disk.
        longitude: Longitude word, null-homologous.
        meridian: Generator index of the meridian; also the transversal.
        family: Family and parameter the words came from, if any.
        weights: Weight override; inferred from the relator when None.

    Example:
        >>> spec = twist_family(1)
        >>> str(spec.relator.as_word()) == str(spec.relator)
        True
    """

    name: str
    alphabet: Alphabet
    relator: CyclicWord
    longitude: Word
    meridian: int = 0
    family: Optional[Family] = None
    weights: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "SplittingSpec":
        return load_splitting(path)

    def weight_map(self, modulus: int) -> WeightMap:
        if self.weights is not None:
            return WeightMap(tuple(self.weights), modulus)
        return infer_weights(self.relator, modulus, transversal=self.meridian)

    def to_dict(self) -> Dict:
        return {
            "generators": self.alphabet.to_list(),
            "relator": str(self.relator),
            "longitude": str(self.longitude),
            "meridian": self.alphabet.names[self.meridian],
            "family": self.family.to_dict() if self.family else None,
            "weights": list(self.weights) if self.weights is not None else None,
        }


class FamilyModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: Literal["twist", "custom"]
    n: Optional[int] = Field(default=None, ge=1)


class SplittingFile(BaseModel):
    """On-disk splitting description; unknown fields are rejected."""

    model_config = ConfigDict(extra="forbid")

    generators: List[str] = Field(default_factory=lambda: ["x", "y"])
    relator: str
    longitude: str
    meridian: str = "x"
    family: Optional[FamilyModel] = None
    weights: Optional[List[int]] = None


def spec_from_model(model: SplittingFile, name: str = "custom") -> SplittingSpec:
    """Turn a parsed file into a validated SplittingSpec.

    Raises:
        SpecValidationError: If the words or parameters are invalid.
    """
    try:
        alphabet = Alphabet.from_list(model.generators)
        spec = SplittingSpec(
            name=name,
            alphabet=alphabet,
            relator=CyclicWord.of(parse_word(model.relator, alphabet)),
            longitude=parse_word(model.longitude, alphabet),
            meridian=alphabet.index(model.meridian),
            family=Family(model.family.name, model.family.n) if model.family else None,
            weights=tuple(model.weights) if model.weights is not None else None,
        )
    except ParseError as exc:
        raise SpecValidationError(str(exc)) from exc
    ok, message = validate_splitting(spec)
    if not ok:
        raise SpecValidationError(message)
    return spec


def load_splitting(path: Union[str, Path]) -> SplittingSpec:
    """Read and validate a splitting JSON file."""
    path = Path(path)
    try:
        model = SplittingFile.model_validate_json(path.read_text(encoding="utf-8"))
    except ValidationError as exc:
        raise SpecValidationError(f"{path}: {exc}") from exc
    return spec_from_model(model, name=path.stem)


def twist_family(n: int) -> SplittingSpec:
    """Words of the twist-knot family member with parameter n.

    Raises:
        SpecValidationError: If n < 1.
    """
    if n < 1:
        raise SpecValidationError(f"Family parameter n must be at least 1, got {n}")
    alphabet = Alphabet.of("x", "y")
    return SplittingSpec(
        name=f"twist{n}",
        alphabet=alphabet,
        relator=CyclicWord.of(parse_word(twist_relator_text(n), alphabet)),
        longitude=parse_word(twist_longitude_text(n), alphabet),
        meridian=0,
        family=Family(TWIST, n),
    )


@dataclass(frozen=True)
class SlopeParam:
    """Slope p/q with q ≥ 1 and gcd(p, q) = 1."""

    p: int
    q: int = 1

    def __post_init__(self):
        if self.q < 1:
            raise SlopeError(f"Slope denominator must be positive, got {self.p}/{self.q}")
        if gcd(self.p, self.q) != 1:
            raise SlopeError(f"Slope {self.p}/{self.q} is not in lowest terms")

    @classmethod
    def parse(cls, text: str) -> "SlopeParam":
        parts = text.strip().split("/")
        try:
            if len(parts) == 1:
                return cls(int(parts[0]), 1)
            if len(parts) == 2:
                return cls(int(parts[0]), int(parts[1]))
        except ValueError:
            pass
        raise SlopeError(f"Slope must look like P/Q, got {text!r}")

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def slope_curve(spec: SplittingSpec, s: SlopeParam) -> Word:
    """The slope word λ^q · μ^p, longitude power first."""
    meridian = Word.generator(spec.alphabet, spec.meridian)
    return spec.longitude.power(s.q) * meridian.power(s.p)


def lift_slope(modulus: int, downstairs: SlopeParam) -> SlopeParam:
    """Upstairs slope of a filling: p/q downstairs becomes (p/m)/q.

    Raises:
        SlopeError: If m < 1 or m does not divide p.
    """
    if modulus < 1:
        raise SlopeError(f"Cover degree must be at least 1, got {modulus}")
    if downstairs.p % modulus != 0:
        raise SlopeError(f"Slope {downstairs} does not lift to the {modulus}-fold cover: {modulus} ∤ {downstairs.p}")
    return SlopeParam(downstairs.p // modulus, downstairs.q)


def drop_slope(modulus: int, upstairs: SlopeParam) -> SlopeParam:
    """Downstairs slope (m·p)/q of an upstairs slope p/q."""
    return SlopeParam(modulus * upstairs.p, upstairs.q)


@dataclass
class CoverSide:
    """Lifted disk words of one side of the cover's splitting.

    Attributes:
        kernel_data: Schreier data of the cover.
        relator_lifts: Lifts of the tunnel-disk boundary.
        longitude_lift: Basepoint-0 lift of the longitude.
        slope: Upstairs slope, if a filling was requested.
        slope_word: Downstairs slope word that was lifted.
        slope_lift: Basepoint-0 lift of the slope word.
    """

    kernel_data: SchreierData
    relator_lifts: Lifts
    longitude_lift: CyclicWord
    slope: Optional[SlopeParam] = None
    slope_word: Optional[Word] = None
    slope_lift: Optional[CyclicWord] = None

    @property
    def disk_words(self) -> List[CyclicWord]:
        words = list(self.relator_lifts)
        if self.slope_lift is not None:
            words.append(self.slope_lift)
        return words

    def to_dict(self) -> Dict:
        return {
            "kernel": self.kernel_data.to_dict(),
            "relator_lifts": [str(w) for w in self.relator_lifts],
            "period_collapse": self.relator_lifts.period_collapse,
            "longitude_lift": str(self.longitude_lift),
            "slope": str(self.slope) if self.slope else None,
            "slope_word": str(self.slope_word) if self.slope_word is not None else None,
            "slope_lift": str(self.slope_lift) if self.slope_lift is not None else None,
            "disk_words": [str(w) for w in self.disk_words],
        }


def build_cover_side(spec: SplittingSpec, modulus: int, s: Optional[SlopeParam] = None) -> CoverSide:
    """Lift the splitting to the m-fold cyclic cover.

    Args:
        spec: A validated splitting.
        modulus: Cover degree m.
        s: Upstairs filling slope; the curve lifted is the downstairs slope
            (m·p)/q.

    Returns:
        The relator lifts, the longitude lift and, with a slope, the slope
        lift appended to the disk words.
    """
    data = schreier_basis(modulus, spec.weight_map(modulus), spec.meridian, spec.alphabet)
    relator_lifts = lifts_of(spec.relator, data)
    longitude_lift = lifts_of(CyclicWord.of(spec.longitude), data)[0]
    side = CoverSide(data, relator_lifts, longitude_lift)
    if s is not None:
        downstairs = drop_slope(modulus, s)
        word = slope_curve(spec, downstairs)
        cyclic = CyclicWord.of(word)
        side.slope = s
        side.slope_word = word
        side.slope_lift = CyclicWord.of(rewrite_in_kernel(cyclic.as_word(), 0, data))
        logger.debug("slope %s lifts to %s", downstairs, side.slope_lift)
    return side
