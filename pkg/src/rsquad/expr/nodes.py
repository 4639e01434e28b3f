"""Expression tree nodes.

Trees are immutable tagged nodes.  parse() builds raw nodes exactly as
written; the fold_* constructors (used by differentiation) do constant
folding and the 0/1 identities so derivative trees stay small.
"""

import math
from dataclasses import dataclass

CONST = "const"
VAR_T = "t"

BINARY = ("add", "sub", "mul", "div", "pow")
UNARY = ("neg", "exp", "ln", "sin", "cos", "sqrt", "abs", "erf")
LEAVES = (CONST, VAR_T)

ARITY = {k: 2 for k in BINARY}
ARITY.update({k: 1 for k in UNARY})
ARITY.update({k: 0 for k in LEAVES})

KINDS = tuple(ARITY)


@dataclass(frozen=True)
class ExprNode:
    kind: str
    children: tuple = ()
    value: float = 0.0

    def __post_init__(self):
        if self.kind not in ARITY:
            raise ValueError("unknown node kind %r" % self.kind)
        if len(self.children) != ARITY[self.kind]:
            raise ValueError(
                "%s node takes %d children, got %d"
                % (self.kind, ARITY[self.kind], len(self.children))
            )
        if self.kind == CONST and not math.isfinite(self.value):
            raise ValueError("constant value must be finite")

    def __str__(self):
        from .printer import print_expression

        return print_expression(self)


T = ExprNode(VAR_T)


def const(v):
    return ExprNode(CONST, value=float(v))


def add(a, b):
    return ExprNode("add", (a, b))


def sub(a, b):
    return ExprNode("sub", (a, b))


def mul(a, b):
    return ExprNode("mul", (a, b))


def div(a, b):
    return ExprNode("div", (a, b))


def pow_(a, b):
    return ExprNode("pow", (a, b))


def neg(a):
    return ExprNode("neg", (a,))


def func(name, a):
    return ExprNode(name, (a,))


def _is_const(e, v=None):
    return e.kind == CONST and (v is None or e.value == v)


def fold_add(a, b):
    if _is_const(a) and _is_const(b):
        return const(a.value + b.value)
    if _is_const(a, 0.0):
        return b
    if _is_const(b, 0.0):
        return a
    return add(a, b)


def fold_sub(a, b):
    if _is_const(a) and _is_const(b):
        return const(a.value - b.value)
    if _is_const(b, 0.0):
        return a
    if _is_const(a, 0.0):
        return fold_neg(b)
    return sub(a, b)


def fold_mul(a, b):
    if _is_const(a) and _is_const(b):
        return const(a.value * b.value)
    if _is_const(a, 0.0) or _is_const(b, 0.0):
        return const(0.0)
    if _is_const(a, 1.0):
        return b
    if _is_const(b, 1.0):
        return a
    return mul(a, b)


def fold_div(a, b):
    if _is_const(a, 0.0):
        return const(0.0)
    if _is_const(b, 1.0):
        return a
    if _is_const(a) and _is_const(b) and b.value != 0.0:
        q = a.value / b.value
        if math.isfinite(q):
            return const(q)
    return div(a, b)


def fold_neg(a):
    if _is_const(a):
        return const(-a.value)
    if a.kind == "neg":
        return a.children[0]
    return neg(a)


def fold_pow(a, b):
    if _is_const(b, 1.0):
        return a
    if _is_const(b, 0.0):
        return const(1.0)
    if _is_const(a) and _is_const(b):
        try:
            v = a.value**b.value
        except (OverflowError, ValueError, ZeroDivisionError):
            return pow_(a, b)
        if isinstance(v, float) and math.isfinite(v):
            return const(v)
    return pow_(a, b)


def contains_variable(e):
    if e.kind == VAR_T:
        return True
    return any(contains_variable(c) for c in e.children)


def contains_kind(e, kind):
    if e.kind == kind:
        return True
    return any(contains_kind(c, kind) for c in e.children)
