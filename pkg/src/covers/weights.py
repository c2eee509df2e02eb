"""Weight homomorphisms from a free group onto Z/m."""

from dataclasses import dataclass
from math import gcd
from typing import Dict, Sequence, Tuple

from src.utils.errors import WeightError
from src.words.word import exponent_vector


@dataclass(frozen=True)
class WeightMap:
    """Integer weight per generator, read modulo ``modulus``.

    Attributes:
        weights: One integer per generator of the base alphabet.
        modulus: The cover degree m (m = 1 is the identity cover).
    """

    weights: Tuple[int, ...]
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise WeightError(f"Modulus must be positive, got {self.modulus}")
        common = self.modulus
        for w in self.weights:
            common = gcd(common, w)
        if common != 1:
            raise WeightError(
                f"Weights {list(self.weights)} do not map onto Z/{self.modulus} (gcd {common})"
            )

    def of_letter(self, generator: int) -> int:
        return self.weights[generator]

    def with_modulus(self, modulus: int) -> "WeightMap":
        return WeightMap(self.weights, modulus)

    def to_dict(self) -> Dict:
        return {"weights": list(self.weights), "modulus": self.modulus}


def infer_weights(relator, modulus: int, transversal: int = 0) -> WeightMap:
    """Primitive weights annihilating the relator's exponent vector.

    Args:
        relator: Rank-2 Word or CyclicWord.
        modulus: Cover degree m.
        transversal: Generator whose weight is normalized positive.

    Returns:
        The WeightMap (w_x, w_y) with w·e = 0 and gcd(w_x, w_y) = 1.

    Raises:
        WeightError: If the exponent vector is zero, the base rank is not 2,
            or the weights do not map onto Z/m.

    Example:
        >>> infer_weights(parse_cyclic("XYXyxyxYXYxyxy", Alphabet.of("x", "y")), 3).weights
        (1, -1)
    """
    vector = exponent_vector(relator)
    if len(vector) != 2:
        raise WeightError(f"Weight inference needs a rank-2 relator, got rank {len(vector)}")
    ex, ey = vector
    if ex == 0 and ey == 0:
        raise WeightError("Relator has zero exponent vector; weights are underdetermined")
    common = gcd(ex, ey)
    weights = [ey // common, -ex // common]
    pivot = weights[transversal] if weights[transversal] != 0 else next(w for w in weights if w != 0)
    if pivot < 0:
        weights = [-w for w in weights]
    return WeightMap(tuple(weights), modulus)


def coset_of(w, weights: WeightMap) -> int:
    """Weight sum of a word modulo m; additive under concatenation."""
    vector = exponent_vector(w)
    return sum(e * k for e, k in zip(vector, weights.weights)) % weights.modulus


def weight_sum(w, weights: Sequence[int]) -> int:
    return sum(e * k for e, k in zip(exponent_vector(w), weights))
