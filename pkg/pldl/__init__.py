"""
|pldl| is a verification toolkit for Parametric Linear Dynamic Logic, a
linear-time logic whose temporal operators are guarded by regular
expressions and may carry variable bounds like ``<tt*>{<=x} resp``.

It translates formulas into alternating and nondeterministic Büchi
automata, model checks transition systems while synthesizing a valuation for
the variables and decides realizability with strategy extraction. Every
construction is tested against a direct implementation of the semantics.

>>> import pldl
>>> spec = pldl.Specification('[tt*](req -> <tt*>{<=x} resp)')
>>> spec
<Specification: '[tt*](!req | <tt*>{<=x}resp)'>
>>> result = spec.model_check('''
... state idle init {}
... state asked {req}
... state done {resp}
... edge idle idle
... edge idle asked
... edge asked done
... edge done idle
... ''')
>>> result.holds
True
"""

__version__ = '0.1.0'

from pldl.api import Specification, set_debug_function  # noqa: F401
from pldl import settings  # noqa: F401
from pldl.api.exceptions import FormulaSyntaxError, NotWellFormed, FragmentError, \
    UnboundVariable, SystemFormatError, PartitionError, CapExceeded  # noqa: F401
