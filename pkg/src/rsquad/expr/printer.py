"""Expression printing.  Output re-parses to the same evaluation semantics."""

from . import nodes

_PREC_ADD = 1
_PREC_MUL = 2
_PREC_NEG = 3
_PREC_POW = 4
_PREC_ATOM = 9

_BIN = {"add": ("+", _PREC_ADD), "sub": ("-", _PREC_ADD),
        "mul": ("*", _PREC_MUL), "div": ("/", _PREC_MUL),
        "pow": ("^", _PREC_POW)}


def _prec(e):
    if e.kind in _BIN:
        return _BIN[e.kind][1]
    if e.kind == "neg":
        return _PREC_NEG
    if e.kind == nodes.CONST and e.value < 0:
        # a negative literal prints with a leading '-', so it binds
        # like a unary minus
        return _PREC_NEG
    return _PREC_ATOM


def _wrap(text, need):
    return "(" + text + ")" if need else text


def print_expression(e):
    """Render an expression tree as parseable source text."""
    kind = e.kind
    if kind == nodes.CONST:
        return repr(e.value)
    if kind == nodes.VAR_T:
        return "t"
    if kind == "neg":
        child = e.children[0]
        return "-" + _wrap(print_expression(child), _prec(child) < _PREC_NEG)
    if kind in _BIN:
        sym, prec = _BIN[kind]
        left, right = e.children
        if kind == "pow":
            # right-associative: parenthesize a pow/neg left operand;
            # the exponent slot parses a factor, so +,-,*,/ need parens
            ls = _wrap(print_expression(left), _prec(left) <= prec)
            rs = _wrap(print_expression(right), _prec(right) < _PREC_NEG)
        else:
            ls = _wrap(print_expression(left), _prec(left) < prec)
            # - and / do not right-associate
            strict = kind in ("sub", "div")
            rp = _prec(right)
            rs = _wrap(print_expression(right), rp < prec or (strict and rp == prec))
        return ls + sym + rs
    # unary function
    return kind + "(" + print_expression(e.children[0]) + ")"
