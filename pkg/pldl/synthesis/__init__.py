"""
Realizability: determinization, parity games and strategy extraction.
"""
from pldl.synthesis.determinize import DPA, determinize  # noqa: F401
from pldl.synthesis.game import (  # noqa: F401
    INPUT, OUTPUT, ParityGame, build_game, solve_parity, brute_force_winner,
)
from pldl.synthesis.realize import (  # noqa: F401
    Transducer, Realizable, Unrealizable, realize, realize_at, spaced_strategy,
)
