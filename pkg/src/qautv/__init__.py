"""Exact arithmetic for Thompson's group V and the quasi-automorphism group
QAut(T_2,c), with the embeddings between them, slope dynamics, and explicit
Baumslag-Solitar subgroups of V."""

from .words import (
    PrefixRelation, compare, is_complete_antichain, refine, expand,
    word_key, sort_words, parse_word, format_word,
)
from .thompson_v import VElement, identity as v_identity
from .qaut import QAutElement, MinimalDecomposition

__all__ = [
    "PrefixRelation", "compare", "is_complete_antichain", "refine", "expand",
    "word_key", "sort_words", "parse_word", "format_word",
    "VElement", "v_identity", "QAutElement", "MinimalDecomposition",
]
