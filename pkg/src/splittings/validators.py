"""Validation rules for splitting descriptions.

Each validator returns ``(is_valid, error_message)`` so callers can collect
messages; loaders turn a failure into ``SpecValidationError``.
"""

from typing import Tuple

from src.covers.weights import infer_weights, weight_sum
from src.splittings.formulas import twist_longitude_text, twist_relator_text
from src.utils.errors import VhkError
from src.words.parser import parse_cyclic, parse_word
from src.words.word import exponent_vector


def validate_rank(spec) -> Tuple[bool, str]:
    """The handlebody side must have rank 2."""
    if spec.alphabet.rank != 2:
        return False, f"Splitting must have two generators, got {spec.alphabet.rank}"
    return True, ""


def validate_longitude(spec) -> Tuple[bool, str]:
    """The longitude must be null-homologous."""
    vector = exponent_vector(spec.longitude)
    if any(vector):
        return False, f"Longitude exponent vector must be zero, got {vector}"
    return True, ""


def validate_weights(spec) -> Tuple[bool, str]:
    """The relator must have weight sum 0 under the supplied or inferred weights.

    Rules:
        - Supplied weights need one entry per generator
        - The meridian must carry nonzero weight
    """
    if not spec.relator.letters:
        return False, "Relator cannot be empty"
    if spec.weights is not None:
        weights = tuple(spec.weights)
        if len(weights) != spec.alphabet.rank:
            return False, f"Expected {spec.alphabet.rank} weights, got {len(weights)}"
    else:
        try:
            weights = infer_weights(spec.relator, 1, transversal=spec.meridian).weights
        except VhkError as exc:
            return False, str(exc)
    if weight_sum(spec.relator, weights) != 0:
        return False, f"Relator has nonzero weight sum under weights {list(weights)}"
    if weights[spec.meridian] == 0:
        return False, "Meridian has weight 0 and cannot carry the transversal"
    return True, ""


def validate_family(spec) -> Tuple[bool, str]:
    """A twist-family spec must carry the family words for its parameter."""
    family = spec.family
    if family is None or family.name != "twist":
        return True, ""
    if family.n is None or family.n < 1:
        return False, "Twist family needs a parameter n >= 1"
    try:
        relator = parse_cyclic(twist_relator_text(family.n), spec.alphabet)
        longitude = parse_word(twist_longitude_text(family.n), spec.alphabet)
    except VhkError:
        return False, "Twist family words need the generators x and y"
    if relator != spec.relator:
        return False, f"Relator does not match the twist family with n={family.n}"
    if longitude != spec.longitude:
        return False, f"Longitude does not match the twist family with n={family.n}"
    return True, ""


def validate_splitting(spec) -> Tuple[bool, str]:
    """Run every rule in order and return the first failure.

    Args:
        spec: The SplittingSpec to check.

    Returns:
        Tuple of (is_valid, error_message).
    """
    for rule in (validate_rank, validate_weights, validate_longitude, validate_family):
        is_valid, error_msg = rule(spec)
        if not is_valid:
            return False, error_msg
    return True, ""
