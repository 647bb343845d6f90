"""
The automata pipeline: marked ε-NFAs for regular expressions, alternating
Büchi automata for formulas and nondeterministic Büchi automata obtained by
removing alternation.
"""
from pldl.automata.nfa import (  # noqa: F401
    MarkedEpsilonNFA, thompson, cp_product, counter_product, epsilon_paths,
)
from pldl.automata.aba import ABA, build_aba, aba_membership  # noqa: F401
from pldl.automata.nba import NBA, remove_alternation, is_empty, membership  # noqa: F401
