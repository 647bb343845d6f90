"""
Words, valuations and the reference semantics of PLDL.
"""
from pldl.semantics.word import (  # noqa: F401
    LassoWord, Valuation, parse_word, changepoints, blocks, block_lengths, is_k_spaced,
    is_k_bounded, uniform_coloring, strip_color,
)
from pldl.semantics.oracle import Evaluator, evaluate, match_relation  # noqa: F401
