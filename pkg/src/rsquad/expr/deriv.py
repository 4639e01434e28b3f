"""Symbolic differentiation."""

import math

from ..errors import NonDifferentiableError
from .nodes import (
    CONST,
    VAR_T,
    const,
    fold_add,
    fold_div,
    fold_mul,
    fold_neg,
    fold_pow,
    fold_sub,
    func,
    pow_,
)

_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)


def _d(e):
    kind = e.kind
    if kind == CONST:
        return const(0.0)
    if kind == VAR_T:
        return const(1.0)
    if kind == "add":
        return fold_add(_d(e.children[0]), _d(e.children[1]))
    if kind == "sub":
        return fold_sub(_d(e.children[0]), _d(e.children[1]))
    if kind == "mul":
        a, b = e.children
        return fold_add(fold_mul(_d(a), b), fold_mul(a, _d(b)))
    if kind == "div":
        a, b = e.children
        num = fold_sub(fold_mul(_d(a), b), fold_mul(a, _d(b)))
        return fold_div(num, fold_mul(b, b))
    if kind == "pow":
        a, b = e.children
        if b.kind == CONST:
            c = b.value
            return fold_mul(
                fold_mul(const(c), fold_pow(a, const(c - 1.0))), _d(a)
            )
        # general case: a^b * (b' ln a + b a'/a)
        inner = fold_add(
            fold_mul(_d(b), func("ln", a)), fold_div(fold_mul(b, _d(a)), a)
        )
        return fold_mul(pow_(a, b), inner)
    if kind == "neg":
        return fold_neg(_d(e.children[0]))
    g = e.children[0] if e.children else None
    if kind == "exp":
        return fold_mul(func("exp", g), _d(g))
    if kind == "ln":
        return fold_div(_d(g), g)
    if kind == "sin":
        return fold_mul(func("cos", g), _d(g))
    if kind == "cos":
        return fold_neg(fold_mul(func("sin", g), _d(g)))
    if kind == "sqrt":
        return fold_div(_d(g), fold_mul(const(2.0), func("sqrt", g)))
    if kind == "erf":
        gauss = func("exp", fold_neg(fold_mul(g, g)))
        return fold_mul(fold_mul(const(_TWO_OVER_SQRT_PI), gauss), _d(g))
    raise NonDifferentiableError(kind)


def differentiate(e, n=1):
    """Exact symbolic n-th derivative of an expression tree."""
    if n < 1:
        raise ValueError("derivative order must be >= 1")
    for _ in range(n):
        e = _d(e)
    return e
