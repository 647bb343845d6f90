"""
Formulas of Parametric Linear Dynamic Logic: the syntax tree
(:mod:`.tree`), the concrete syntax (:mod:`.parser`, :mod:`.printer`) and
syntactic transformations (:mod:`.transform`).
"""
from pldl.formula.tree import Formula, Regex, PropFormula  # noqa: F401
from pldl.formula.parser import parse, parse_regex, parse_prop  # noqa: F401
from pldl.formula.printer import pretty_print  # noqa: F401
from pldl.formula.transform import (  # noqa: F401
    negate, closure, size, var_sets, check_well_formed, eliminate_boxes,
    relativize, color_transform, propositions, VarSets,
)
