class _PLDLError(Exception):
    pass


class FormulaSyntaxError(_PLDLError):
    """
    Raised for text that does not conform to the formula grammar, the lasso
    word format or the valuation format. The position is available as
    :attr:`line` (starting with 1) and :attr:`column` (starting with 0).
    """
    def __init__(self, message, line=1, column=0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def get_message(self):
        return self.message

    def __str__(self):
        return '%s (line %s, column %s)' % (self.message, self.line, self.column)

    def __repr__(self):
        return '<%s: %r at %s:%s>' % (
            self.__class__.__name__, self.message, self.line, self.column)


class NotWellFormed(_PLDLError):
    """
    A variable bounds both a diamond and a box operator. Such formulas are
    rejected by everything that needs well-formedness, for example model
    checking and realizability.
    """


class FragmentError(_PLDLError):
    """
    The formula is outside the fragment an operation works on, e.g. a
    parameterized box passed to the color transformation or a parameterized
    operator passed to the automaton construction without a valuation.
    """


class UnboundVariable(_PLDLError):
    """
    A valuation was asked for a variable it does not assign and has no default
    value.
    """
    def __init__(self, name):
        super().__init__('variable %r has no value' % name)
        self.name = name


class SystemFormatError(_PLDLError):
    """
    A transition system file is malformed, e.g. a state without successors,
    an edge to an unknown state or not exactly one initial state.
    """
    def __init__(self, message, line=None):
        super().__init__(message if line is None else 'line %s: %s' % (line, message))
        self.line = line


class PartitionError(_PLDLError):
    """
    The inputs and outputs of a realizability problem overlap or do not cover
    the propositions of the formula.
    """


class CapExceeded(_PLDLError):
    """
    An explicit construction grew beyond the cap configured in
    :mod:`pldl.settings`. This signals that the problem is too large, not that
    the answer is wrong.
    """
    def __init__(self, what, cap):
        super().__init__('%s exceeded the cap of %s states' % (what, cap))
        self.what = what
        self.cap = cap
