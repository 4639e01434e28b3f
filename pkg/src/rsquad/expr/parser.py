"""Recursive-descent parser for the expression grammar.

Grammar (precedence lowest to highest, ^ right-associative):

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := '-' factor | power
    power  := atom ('^' factor)?
    atom   := NUMBER | 't' | FUNC '(' expr ')' | '(' expr ')'

Whitespace is insignificant.  There is no implicit multiplication and
no '**' operator.  Numeric literals allow decimals and scientific
notation.
"""

import re

from ..errors import ExpressionSyntaxError, UnknownIdentifierError
from . import nodes

FUNCTIONS = ("exp", "ln", "sin", "cos", "sqrt", "abs", "erf")

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class _Tokenizer:
    def __init__(self, source):
        self.source = source
        self.pos = 0
        self.tokens = []
        self._scan()
        self.index = 0

    def _scan(self):
        s = self.source
        i = 0
        n = len(s)
        while i < n:
            ch = s[i]
            if ch.isspace():
                i += 1
                continue
            if ch in "+-*/^()":
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            m = _NUMBER.match(s, i)
            if m:
                self.tokens.append(("number", m.group(), i))
                i = m.end()
                continue
            m = _IDENT.match(s, i)
            if m:
                self.tokens.append(("ident", m.group(), i))
                i = m.end()
                continue
            raise ExpressionSyntaxError("unexpected character %r" % ch, i)
        self.tokens.append(("eof", "", n))

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        tok = self.tokens[self.index]
        if tok[0] != "eof":
            self.index += 1
        return tok

    def expect(self, kind, what):
        tok = self.peek()
        if tok[0] != kind:
            raise ExpressionSyntaxError(
                "expected %s, found %r" % (what, tok[1] or "end of input"), tok[2]
            )
        return self.advance()


class _Parser:
    def __init__(self, source):
        self.toks = _Tokenizer(source)

    def parse(self):
        e = self.expr()
        tok = self.toks.peek()
        if tok[0] != "eof":
            raise ExpressionSyntaxError("unexpected trailing %r" % tok[1], tok[2])
        return e

    def expr(self):
        e = self.term()
        while self.toks.peek()[0] in ("+", "-"):
            op = self.toks.advance()[0]
            rhs = self.term()
            e = nodes.add(e, rhs) if op == "+" else nodes.sub(e, rhs)
        return e

    def term(self):
        e = self.factor()
        while self.toks.peek()[0] in ("*", "/"):
            op = self.toks.advance()[0]
            rhs = self.factor()
            e = nodes.mul(e, rhs) if op == "*" else nodes.div(e, rhs)
        return e

    def factor(self):
        if self.toks.peek()[0] == "-":
            self.toks.advance()
            return nodes.neg(self.factor())
        return self.power()

    def power(self):
        base = self.atom()
        if self.toks.peek()[0] == "^":
            self.toks.advance()
            return nodes.pow_(base, self.factor())
        return base

    def atom(self):
        tok = self.toks.peek()
        kind, text, pos = tok
        if kind == "number":
            self.toks.advance()
            return nodes.const(float(text))
        if kind == "ident":
            self.toks.advance()
            if text == "t":
                return nodes.T
            if text in FUNCTIONS:
                self.toks.expect("(", "'(' after function name %r" % text)
                arg = self.expr()
                self.toks.expect(")", "')'")
                return nodes.func(text, arg)
            raise UnknownIdentifierError(text, pos)
        if kind == "(":
            self.toks.advance()
            e = self.expr()
            self.toks.expect(")", "')'")
            return e
        raise ExpressionSyntaxError(
            "expected a number, 't', function call or '(', found %r"
            % (text or "end of input"),
            pos,
        )


def parse_expression(source):
    """Parse source text into an expression tree."""
    return _Parser(source).parse()
