"""Compile expression trees to postfix programs."""

from ..backend import programs as P
from . import nodes

_OPCODE = {
    "add": P.ADD,
    "sub": P.SUB,
    "mul": P.MUL,
    "div": P.DIV,
    "pow": P.POW,
    "neg": P.NEG,
    "exp": P.EXP,
    "ln": P.LN,
    "sin": P.SIN,
    "cos": P.COS,
    "sqrt": P.SQRT,
    "abs": P.ABS,
    "erf": P.ERF,
}


def compile_expression(e):
    codes = []
    args = []
    consts = []
    const_index = {}

    def emit(node):
        if node.kind == nodes.CONST:
            idx = const_index.get(node.value)
            if idx is None:
                idx = len(consts)
                consts.append(node.value)
                const_index[node.value] = idx
            codes.append(P.PUSH_CONST)
            args.append(idx)
            return
        if node.kind == nodes.VAR_T:
            codes.append(P.PUSH_T)
            args.append(0)
            return
        for child in node.children:
            emit(child)
        codes.append(_OPCODE[node.kind])
        args.append(0)

    emit(e)

    depth = 0
    max_depth = 0
    for op in codes:
        if op in (P.PUSH_CONST, P.PUSH_T):
            depth += 1
        elif op in (P.ADD, P.SUB, P.MUL, P.DIV, P.POW):
            depth -= 1
        max_depth = max(max_depth, depth)
    return P.Program(codes, args, consts, max_depth)
