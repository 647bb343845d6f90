"""
A recursive descent parser for the concrete formula syntax::

    formula := disj ; disj := conj { "|" conj } ; conj := impl { "&" impl } ;
    impl    := unary [ "->" formula ] ;
    unary   := "!" unary | "tt" | "ff" | ident | "(" formula ")"
             | "<" regex ">" bound unary | "[" regex "]" bound unary
             | "X" unary | "F" bound unary | "G" bound unary
             | "(" formula "U" formula ")" ;
    bound   := "" | "{<=" ident "}" | "{cp}" ;
    regex   := rchoice ; rchoice := rseq { "+" rseq } ; rseq := rstar { ";" rstar } ;
    rstar   := ratom { "*" } ; ratom := propformula | formula "?" | "(" regex ")" ;

The result is always in negation normal form: ``!`` on compound formulas and
``->`` are pushed inwards with :func:`pldl.formula.transform.negate`.

>>> print(parse('[tt*](req -> F{<=x} resp)'))
[tt*](!req | <tt*>{<=x}resp)
"""
from pldl.api.exceptions import FormulaSyntaxError
from pldl.formula import tree
from pldl.formula.tokenize import TokenStream, NAME, END, describe
from pldl.formula.transform import negate, check_fragment

KEYWORDS = frozenset({'tt', 'ff', 'X', 'F', 'G', 'U', 'cp'})


def parse(text: str) -> tree.Formula:
    """
    Parses ``text`` into a :class:`pldl.formula.tree.Formula`.

    :raises FormulaSyntaxError: for malformed text, reserved names or unknown
        bound suffixes.
    :raises FragmentError: if changepoint and variable bounds are mixed.
    """
    parser = _Parser(text)
    formula = parser.parse_formula()
    parser.stream.expect_end()
    check_fragment(formula)
    return formula


def parse_prop(text: str) -> tree.PropFormula:
    parser = _Parser(text)
    result = parser.parse_prop()
    parser.stream.expect_end()
    return result


def parse_regex(text: str) -> tree.Regex:
    parser = _Parser(text)
    result = parser.parse_regex()
    parser.stream.expect_end()
    return result


def check_identifier(token):
    """Validates a name token as a proposition or variable identifier."""
    if token.kind != NAME:
        raise token.error('expected an identifier, found %s' % describe(token))
    name = token.value
    if name in tree.RESERVED:
        raise token.error('%r is reserved' % name)
    if name in KEYWORDS:
        raise token.error('%r is a keyword' % name)
    if not (name[0].isascii() and name[0].isalpha()) \
            or not all(c.isascii() and (c.isalnum() or c == '_') for c in name):
        raise token.error('invalid identifier %r' % name)
    return name


class _Parser:
    def __init__(self, text):
        self.stream = TokenStream(text)
        # Packrat memo for the backtracking alternatives of ``ratom``.
        self._memo = {}
        self._furthest = None

    def _fail(self, error):
        if self._furthest is None or (error.line, error.column) >= \
                (self._furthest.line, self._furthest.column):
            self._furthest = error

    def _attempt(self, name, rule):
        """
        Runs ``rule`` at the current position. On failure the position is
        restored and None is returned.
        """
        start = self.stream.index
        key = (name, start)
        try:
            result, end = self._memo[key]
        except KeyError:
            try:
                result = rule()
            except FormulaSyntaxError as e:
                self._fail(e)
                result = None
            end = self.stream.index
            self._memo[key] = result, end
        self.stream.index = end if result is not None else start
        return result

    # Formulas

    def parse_formula(self):
        lhs = self._parse_conj()
        while self.stream.accept('|'):
            lhs = tree.Or(lhs, self._parse_conj())
        return lhs

    def _parse_conj(self):
        lhs = self._parse_impl()
        while self.stream.accept('&'):
            lhs = tree.And(lhs, self._parse_impl())
        return lhs

    def _parse_impl(self):
        lhs = self._parse_unary()
        if self.stream.accept('->'):
            return tree.Or(negate(lhs), self.parse_formula())
        return lhs

    def _parse_unary(self):
        stream = self.stream
        token = stream.current
        if stream.accept('!'):
            return negate(self._parse_unary())
        if stream.accept('tt'):
            return tree.TRUE
        if stream.accept('ff'):
            return tree.FALSE
        if stream.accept('X'):
            return tree.Diamond(tree.ANY, self._parse_unary())
        if stream.accept('F'):
            bound = self._parse_bound()
            return tree.Diamond(tree.ANY_STAR, self._parse_unary(), bound)
        if stream.accept('G'):
            bound = self._parse_bound()
            return tree.Box(tree.ANY_STAR, self._parse_unary(), bound)
        if stream.accept('<'):
            regex = self.parse_regex()
            stream.expect('>')
            bound = self._parse_bound()
            return tree.Diamond(regex, self._parse_unary(), bound)
        if stream.accept('['):
            regex = self.parse_regex()
            stream.expect(']')
            bound = self._parse_bound()
            return tree.Box(regex, self._parse_unary(), bound)
        if stream.accept('('):
            formula = self.parse_formula()
            if stream.accept('U'):
                goal = self.parse_formula()
                stream.expect(')')
                step = tree.Seq(tree.Test(formula), tree.ANY)
                return tree.Diamond(tree.Star(step), goal)
            stream.expect(')')
            return formula
        if token.kind == END:
            raise token.error('unexpected end of input')
        if token.kind != NAME:
            raise token.error('unexpected %s' % describe(token))
        stream.next()
        return tree.Atom(check_identifier(token))

    def _parse_bound(self):
        stream = self.stream
        if not stream.accept('{'):
            return None
        if stream.accept('cp'):
            stream.expect('}')
            return tree.CP
        token = stream.current
        if not stream.accept('<='):
            raise token.error('unknown bound suffix %s' % describe(token))
        name = check_identifier(stream.next())
        stream.expect('}')
        return tree.Var(name)

    # Regular expressions

    def parse_regex(self):
        lhs = self._parse_rseq()
        while self.stream.accept('+'):
            lhs = tree.Choice(lhs, self._parse_rseq())
        return lhs

    def _parse_rseq(self):
        lhs = self._parse_rstar()
        while self.stream.accept(';'):
            lhs = tree.Seq(lhs, self._parse_rstar())
        return lhs

    def _parse_rstar(self):
        regex = self._parse_ratom()
        while self.stream.accept('*'):
            regex = tree.Star(regex)
        return regex

    def _parse_ratom(self):
        result = self._attempt('test', self._parse_test)
        if result is not None:
            return result
        result = self._attempt('prop', lambda: tree.Prop(self.parse_prop()))
        if result is not None:
            return result
        token = self.stream.current
        if self.stream.accept('('):
            regex = self.parse_regex()
            self.stream.expect(')')
            return regex
        if self._furthest is not None:
            raise self._furthest
        raise token.error('unexpected %s' % describe(token))

    def _parse_test(self):
        formula = self.parse_formula()
        self.stream.expect('?')
        return tree.Test(formula)

    # Propositional formulas

    def parse_prop(self):
        lhs = self._parse_prop_and()
        while self.stream.accept('|'):
            lhs = tree.POr(lhs, self._parse_prop_and())
        return lhs

    def _parse_prop_and(self):
        lhs = self._parse_prop_not()
        while self.stream.accept('&'):
            lhs = tree.PAnd(lhs, self._parse_prop_not())
        return lhs

    def _parse_prop_not(self):
        stream = self.stream
        token = stream.current
        if stream.accept('!'):
            return tree.PNot(self._parse_prop_not())
        if stream.accept('tt'):
            return tree.TT
        if stream.accept('ff'):
            return tree.FF
        if stream.accept('('):
            result = self.parse_prop()
            stream.expect(')')
            return result
        if token.kind != NAME:
            raise token.error('unexpected %s' % describe(token))
        stream.next()
        return tree.PVar(check_identifier(token))
