"""Expression language: parse, evaluate, print, differentiate."""

from .deriv import differentiate
from .function import ScalarFunction
from .nodes import ExprNode
from .parser import parse_expression
from .printer import print_expression


def eval_expr(e, t):
    """Evaluate an expression tree at a point."""
    return ScalarFunction(e).eval(t)


__all__ = [
    "ExprNode",
    "ScalarFunction",
    "differentiate",
    "eval_expr",
    "parse_expression",
    "print_expression",
]
