"""rsquad: quadrature rules and error bounds for Riemann-Stieltjes integrals.

The toolkit evaluates a one-parameter family of two/three-point rules
for integrals of f against an integrator u, estimates the regularity
constants the rules' a-priori error bounds consume, computes those
bounds, and checks everything against a high-accuracy reference
integrator.
"""

from .backend import BACKEND
from .expr import (
    ExprNode,
    ScalarFunction,
    differentiate,
    eval_expr,
    parse_expression,
    print_expression,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ExprNode",
    "ScalarFunction",
    "differentiate",
    "eval_expr",
    "parse_expression",
    "print_expression",
    "__version__",
]
