"""
This module contains variables with global |pldl| settings. To change the
behavior of |pldl|, change the variables defined in :mod:`pldl.settings`.

All automata constructions in |pldl| are explicit, so each of them has a
state cap. Exceeding a cap raises :class:`pldl.api.exceptions.CapExceeded`
instead of exhausting memory.

Example usage::

    from pldl import settings
    settings.max_det_states = 500000


State caps
~~~~~~~~~~

.. autodata:: max_nba_states
.. autodata:: max_det_states
.. autodata:: max_product_vertices
.. autodata:: max_game_vertices


Randomized suites
~~~~~~~~~~~~~~~~~

.. autodata:: default_seed
"""

max_nba_states = 50000
"""
The maximum number of states the breakpoint construction may create while
removing alternation.
"""

max_det_states = 200000
"""
The maximum number of states of a deterministic parity automaton.
"""

max_product_vertices = 2000000
"""
The maximum number of vertices of products with transition systems and of the
augmented graph used by the pumpable path search.
"""

max_game_vertices = 2000000
"""
The maximum number of vertices of a parity game arena.
"""

default_seed = 0
"""
Seed of the randomized self-test suites if none is given.
"""
