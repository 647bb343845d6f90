"""
Tokenizing for all text formats of |pldl| (formulas, lasso words, valuations
and transition systems). The heavy lifting is done by parso's Python
tokenizer; the formats here only need names, numbers and operator characters.

Python operators are split into single characters again, except ``->`` and
``<=``:

>>> [t.value for t in tokenize('<tt*>{<=x} p -> q')]
['<', 'tt', '*', '>', '{', '<=', 'x', '}', 'p', '->', 'q', '']
"""
from typing import Iterator, List, NamedTuple

from parso.python.token import PythonTokenTypes
from parso.python.tokenize import tokenize as _parso_tokenize
from parso.utils import parse_version_string

from pldl.api.exceptions import FormulaSyntaxError

_VERSION_INFO = parse_version_string('3.8')
_KEPT_OPERATORS = ('->', '<=')
_IGNORED = (
    PythonTokenTypes.NEWLINE,
    PythonTokenTypes.INDENT,
    PythonTokenTypes.DEDENT,
    PythonTokenTypes.ERROR_DEDENT,
)

NAME = 'name'
NUMBER = 'number'
OP = 'op'
END = 'end'


class Token(NamedTuple):
    kind: str
    value: str
    line: int
    column: int

    def error(self, message):
        return FormulaSyntaxError(message, self.line, self.column)


def tokenize(text: str) -> Iterator[Token]:
    for token in _parso_tokenize(text, version_info=_VERSION_INFO):
        typ = token.type
        line, column = token.start_pos
        if typ in _IGNORED:
            continue
        if typ == PythonTokenTypes.ENDMARKER:
            yield Token(END, '', line, column)
            return
        if typ == PythonTokenTypes.NAME:
            yield Token(NAME, token.string, line, column)
        elif typ == PythonTokenTypes.NUMBER:
            yield Token(NUMBER, token.string, line, column)
        elif typ in (PythonTokenTypes.OP, PythonTokenTypes.ERRORTOKEN):
            string = token.string
            if string in _KEPT_OPERATORS:
                yield Token(OP, string, line, column)
                continue
            for offset, char in enumerate(string):
                if not char.isspace():
                    yield Token(OP, char, line, column + offset)
        else:
            raise FormulaSyntaxError('unexpected %r' % token.string, line, column)


def tokenize_list(text: str) -> List[Token]:
    return list(tokenize(text))


class TokenStream:
    """
    A cursor over a token list. Parsers backtrack by saving and restoring
    :attr:`index`.
    """
    def __init__(self, text):
        self.tokens = tokenize_list(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def peek(self, value) -> bool:
        token = self.current
        return token.kind in (OP, NAME) and token.value == value

    def accept(self, value) -> bool:
        if self.peek(value):
            self.index += 1
            return True
        return False

    def expect(self, value) -> Token:
        token = self.current
        if not self.peek(value):
            raise token.error('expected %r, found %s' % (value, describe(token)))
        self.index += 1
        return token

    def next(self) -> Token:
        token = self.current
        if token.kind != END:
            self.index += 1
        return token

    def at_end(self) -> bool:
        return self.current.kind == END

    def expect_end(self):
        token = self.current
        if token.kind != END:
            raise token.error('unexpected %s' % describe(token))


def describe(token: Token) -> str:
    if token.kind == END:
        return 'end of input'
    return repr(token.value)
