"""String reconstruction from composition multisets, with the codes built on it."""

from .equivalence import (
    PSDecomposition,
    class_size,
    decompose,
    dominant_representative,
    equivalence_class,
    is_uniquely_reconstructible_up_to_reversal,
    max_class_size,
    swap,
    swap_one,
)
from .kernels import BACKEND
from .strings_core import (
    CompositionMultiset,
    composition,
    equivalent,
    full_multiset,
    length_l_multiset,
    length_limited_multiset,
    prefix_suffix_multiset,
    reciprocal,
    string_from_profile,
    weight_profile,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CompositionMultiset",
    "PSDecomposition",
    "class_size",
    "composition",
    "decompose",
    "dominant_representative",
    "equivalence_class",
    "equivalent",
    "full_multiset",
    "is_uniquely_reconstructible_up_to_reversal",
    "length_l_multiset",
    "length_limited_multiset",
    "max_class_size",
    "prefix_suffix_multiset",
    "reciprocal",
    "string_from_profile",
    "swap",
    "swap_one",
    "weight_profile",
]
