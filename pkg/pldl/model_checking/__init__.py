"""
Model checking of labeled transition systems with valuation synthesis.
"""
from pldl.model_checking.system import TransitionSystem, parse_ts  # noqa: F401
from pldl.model_checking.colored import (  # noqa: F401
    ColoredBuchiGraph, pumpable_fair_path, naive_pumpable_fair_path, pump,
)
from pldl.model_checking.checker import (  # noqa: F401
    build_product, model_check, check_valuation, tighten, satisfiable, Satisfied, Violated,
)
