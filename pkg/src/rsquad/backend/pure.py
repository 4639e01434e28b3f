"""Pure-Python program evaluator, vectorized with numpy.

This is the fallback used when the compiled core is unavailable (or
disabled with RSQUAD_PURE_PYTHON=1).  Domain checks mirror the compiled
kernel: ln/sqrt/div/pow operand checks before the operation, plus a
final finiteness check that catches overflow.
"""

import numpy as np

from ..errors import EvaluationError
from ..special import erf, erf_array
from . import programs as P

NAME = "pure"


def _fail(code):
    raise EvaluationError(P.ERROR_MESSAGES[code])


def eval_program(prog, ts):
    """Evaluate a Program over a 1-d float64 array of points."""
    ts = np.ascontiguousarray(ts, dtype=np.float64)
    stack = [None] * prog.stack_need
    sp = -1
    codes = prog.codes
    args = prog.args
    consts = prog.consts
    with np.errstate(all="ignore"):
        for i in range(codes.shape[0]):
            op = codes[i]
            if op == P.PUSH_CONST:
                sp += 1
                stack[sp] = np.full(ts.shape, consts[args[i]])
            elif op == P.PUSH_T:
                sp += 1
                stack[sp] = ts.copy()
            elif op == P.ADD:
                stack[sp - 1] += stack[sp]
                sp -= 1
            elif op == P.SUB:
                stack[sp - 1] -= stack[sp]
                sp -= 1
            elif op == P.MUL:
                stack[sp - 1] *= stack[sp]
                sp -= 1
            elif op == P.DIV:
                if (stack[sp] == 0.0).any():
                    _fail(P.ERR_DIV_ZERO)
                stack[sp - 1] /= stack[sp]
                sp -= 1
            elif op == P.POW:
                base = stack[sp - 1]
                ex = stack[sp]
                bad = (base < 0.0) & (ex != np.floor(ex))
                bad |= (base == 0.0) & (ex < 0.0)
                if bad.any():
                    _fail(P.ERR_POW_DOMAIN)
                stack[sp - 1] = np.power(base, ex)
                sp -= 1
            elif op == P.NEG:
                np.negative(stack[sp], out=stack[sp])
            elif op == P.EXP:
                np.exp(stack[sp], out=stack[sp])
            elif op == P.LN:
                if (stack[sp] <= 0.0).any():
                    _fail(P.ERR_LN_DOMAIN)
                np.log(stack[sp], out=stack[sp])
            elif op == P.SIN:
                np.sin(stack[sp], out=stack[sp])
            elif op == P.COS:
                np.cos(stack[sp], out=stack[sp])
            elif op == P.SQRT:
                if (stack[sp] < 0.0).any():
                    _fail(P.ERR_SQRT_DOMAIN)
                np.sqrt(stack[sp], out=stack[sp])
            elif op == P.ABS:
                np.abs(stack[sp], out=stack[sp])
            elif op == P.ERF:
                stack[sp] = erf_array(stack[sp])
            else:
                raise AssertionError("unknown opcode %d" % op)
    out = stack[0]
    if not np.isfinite(out).all():
        _fail(P.ERR_NONFINITE)
    return out


def eval_scalar(prog, t):
    """Evaluate a Program at a single point with plain Python floats."""
    import math

    stack = [0.0] * prog.stack_need
    sp = -1
    codes = prog.codes
    args = prog.args
    consts = prog.consts
    t = float(t)
    for i in range(codes.shape[0]):
        op = codes[i]
        if op == P.PUSH_CONST:
            sp += 1
            stack[sp] = float(consts[args[i]])
        elif op == P.PUSH_T:
            sp += 1
            stack[sp] = t
        elif op == P.ADD:
            stack[sp - 1] += stack[sp]
            sp -= 1
        elif op == P.SUB:
            stack[sp - 1] -= stack[sp]
            sp -= 1
        elif op == P.MUL:
            stack[sp - 1] *= stack[sp]
            sp -= 1
        elif op == P.DIV:
            if stack[sp] == 0.0:
                _fail(P.ERR_DIV_ZERO)
            stack[sp - 1] /= stack[sp]
            sp -= 1
        elif op == P.POW:
            base = stack[sp - 1]
            ex = stack[sp]
            if (base < 0.0 and ex != math.floor(ex)) or (base == 0.0 and ex < 0.0):
                _fail(P.ERR_POW_DOMAIN)
            try:
                stack[sp - 1] = base**ex
            except OverflowError:
                _fail(P.ERR_NONFINITE)
            sp -= 1
        elif op == P.NEG:
            stack[sp] = -stack[sp]
        elif op == P.EXP:
            try:
                stack[sp] = math.exp(stack[sp])
            except OverflowError:
                _fail(P.ERR_NONFINITE)
        elif op == P.LN:
            if stack[sp] <= 0.0:
                _fail(P.ERR_LN_DOMAIN)
            stack[sp] = math.log(stack[sp])
        elif op == P.SIN:
            stack[sp] = math.sin(stack[sp])
        elif op == P.COS:
            stack[sp] = math.cos(stack[sp])
        elif op == P.SQRT:
            if stack[sp] < 0.0:
                _fail(P.ERR_SQRT_DOMAIN)
            stack[sp] = math.sqrt(stack[sp])
        elif op == P.ABS:
            stack[sp] = abs(stack[sp])
        elif op == P.ERF:
            stack[sp] = erf(stack[sp])
        else:
            raise AssertionError("unknown opcode %d" % op)
    out = stack[0]
    if not math.isfinite(out):
        _fail(P.ERR_NONFINITE)
    return out
