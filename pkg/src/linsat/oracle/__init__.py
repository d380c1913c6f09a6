"""Exhaustive ground truth: canonical forms and isomorph-free search."""

from .canonical import CanonicalForm, canonical_form, canonical_relabel
from .search import (
    Budget,
    SearchResult,
    brute_force_ex,
    brute_force_sat,
    enumerate_free,
    saturated_classes,
)

__all__ = [
    "Budget",
    "CanonicalForm",
    "SearchResult",
    "brute_force_ex",
    "brute_force_sat",
    "canonical_form",
    "canonical_relabel",
    "enumerate_free",
    "saturated_classes",
]
