"""321-avoiding involutions: structure, generating functions and path bijections."""
from __future__ import annotations

from .enumeration import count_classes, gen_involutions_avoiding_321, simple_involutions
from .kernels import backend, use_backend
from .paths import CrossingSequence, LatticePath, crossing_sequence, involution_from_sequence
from .perm import Permutation, avoids_321, contains_pattern, is_involution, is_simple
from .series import RationalSeries, expand_named
from .structure import classify, full_tree

__all__ = [
    "CrossingSequence",
    "LatticePath",
    "Permutation",
    "RationalSeries",
    "avoids_321",
    "backend",
    "classify",
    "contains_pattern",
    "count_classes",
    "crossing_sequence",
    "expand_named",
    "full_tree",
    "gen_involutions_avoiding_321",
    "involution_from_sequence",
    "is_involution",
    "is_simple",
    "simple_involutions",
    "use_backend",
]
