# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled program evaluator: the hot kernel of the package.

Executes the postfix programs from rsquad.backend.programs over arrays
of points with a per-point C value stack, one pass, no temporaries.
The erf recurrences are C clones of rsquad.special so the two backends
agree to the last few ulps.
"""

import numpy as np

from ..errors import EvaluationError
from . import programs as P

NAME = "cython"

DEF MAX_STACK = 64

cdef extern from "math.h" nogil:
    double exp(double)
    double log(double)
    double sin(double)
    double cos(double)
    double sqrt(double)
    double fabs(double)
    double pow(double, double)
    double floor(double)
    double copysign(double, double)
    int isfinite(double)

cdef double SQRT_PI = 1.7724538509055160273
cdef double TWO_OVER_SQRT_PI = 1.1283791670955125739

cdef int OP_PUSH_CONST = P.PUSH_CONST
cdef int OP_PUSH_T = P.PUSH_T
cdef int OP_ADD = P.ADD
cdef int OP_SUB = P.SUB
cdef int OP_MUL = P.MUL
cdef int OP_DIV = P.DIV
cdef int OP_POW = P.POW
cdef int OP_NEG = P.NEG
cdef int OP_EXP = P.EXP
cdef int OP_LN = P.LN
cdef int OP_SIN = P.SIN
cdef int OP_COS = P.COS
cdef int OP_SQRT = P.SQRT
cdef int OP_ABS = P.ABS
cdef int OP_ERF = P.ERF

cdef int E_LN = P.ERR_LN_DOMAIN
cdef int E_SQRT = P.ERR_SQRT_DOMAIN
cdef int E_DIV = P.ERR_DIV_ZERO
cdef int E_POW = P.ERR_POW_DOMAIN
cdef int E_FIN = P.ERR_NONFINITE

MAX_STACK_DEPTH = MAX_STACK


cdef double c_erf(double x) nogil:
    cdef double ax, x2, term, total, sign, f, c, d, a, delta
    cdef int k
    if x != x:
        return x
    ax = fabs(x)
    if ax <= 1.0:
        x2 = x * x
        term = x
        total = x
        sign = 1.0
        for k in range(1, 26):
            term = term * x2 / k
            sign = -sign
            total += sign * term / (2 * k + 1)
        return TWO_OVER_SQRT_PI * total
    if ax >= 6.0:
        return copysign(1.0, x)
    # modified Lentz continued fraction for sqrt(pi)*exp(x^2)*erfc(x)
    f = 1e-300
    c = f
    d = 0.0
    for k in range(1, 200):
        a = 1.0 if k == 1 else (k - 1) / 2.0
        d = ax + a * d
        if d == 0.0:
            d = 1e-300
        c = ax + a / c
        if c == 0.0:
            c = 1e-300
        d = 1.0 / d
        delta = c * d
        f *= delta
        if fabs(delta - 1.0) < 1e-17:
            break
    return copysign(1.0 - exp(-ax * ax) / SQRT_PI * f, x)


cdef int run_program(const int[::1] codes, const int[::1] args,
                     const double[::1] consts, const double[::1] ts,
                     double[::1] out) nogil:
    """Returns 0 on success or an error code on the first bad point."""
    cdef double stack[MAX_STACK]
    cdef Py_ssize_t n = ts.shape[0]
    cdef Py_ssize_t ncodes = codes.shape[0]
    cdef Py_ssize_t i, j
    cdef int sp, op
    cdef double v, base, ex
    for i in range(n):
        sp = -1
        for j in range(ncodes):
            op = codes[j]
            if op == OP_PUSH_CONST:
                sp += 1
                stack[sp] = consts[args[j]]
            elif op == OP_PUSH_T:
                sp += 1
                stack[sp] = ts[i]
            elif op == OP_ADD:
                stack[sp - 1] += stack[sp]
                sp -= 1
            elif op == OP_SUB:
                stack[sp - 1] -= stack[sp]
                sp -= 1
            elif op == OP_MUL:
                stack[sp - 1] *= stack[sp]
                sp -= 1
            elif op == OP_DIV:
                if stack[sp] == 0.0:
                    return E_DIV
                stack[sp - 1] /= stack[sp]
                sp -= 1
            elif op == OP_POW:
                base = stack[sp - 1]
                ex = stack[sp]
                if base < 0.0 and ex != floor(ex):
                    return E_POW
                if base == 0.0 and ex < 0.0:
                    return E_POW
                stack[sp - 1] = pow(base, ex)
                sp -= 1
            elif op == OP_NEG:
                stack[sp] = -stack[sp]
            elif op == OP_EXP:
                stack[sp] = exp(stack[sp])
            elif op == OP_LN:
                if stack[sp] <= 0.0:
                    return E_LN
                stack[sp] = log(stack[sp])
            elif op == OP_SIN:
                stack[sp] = sin(stack[sp])
            elif op == OP_COS:
                stack[sp] = cos(stack[sp])
            elif op == OP_SQRT:
                if stack[sp] < 0.0:
                    return E_SQRT
                stack[sp] = sqrt(stack[sp])
            elif op == OP_ABS:
                stack[sp] = fabs(stack[sp])
            else:  # OP_ERF
                stack[sp] = c_erf(stack[sp])
        v = stack[0]
        if not isfinite(v):
            return E_FIN
        out[i] = v
    return 0


def eval_program(prog, ts):
    """Evaluate a Program over a 1-d float64 array of points."""
    cdef double[::1] tview
    ts = np.ascontiguousarray(ts, dtype=np.float64)
    out = np.empty(ts.shape[0], dtype=np.float64)
    tview = ts
    cdef double[::1] oview = out
    cdef const int[::1] codes = prog.codes
    cdef const int[::1] args = prog.args
    cdef const double[::1] consts = prog.consts
    cdef int code
    with nogil:
        code = run_program(codes, args, consts, tview, oview)
    if code != 0:
        raise EvaluationError(P.ERROR_MESSAGES[code])
    return out


def eval_scalar(prog, double t):
    """Evaluate a Program at a single point."""
    cdef double[1] tbuf
    cdef double[1] obuf
    cdef double[::1] tview = tbuf
    cdef double[::1] oview = obuf
    tbuf[0] = t
    cdef const int[::1] codes = prog.codes
    cdef const int[::1] args = prog.args
    cdef const double[::1] consts = prog.consts
    cdef int code = run_program(codes, args, consts, tview, oview)
    if code != 0:
        raise EvaluationError(P.ERROR_MESSAGES[code])
    return obuf[0]


def erf(double x):
    """Compiled erf, exposed for the benchmark."""
    return c_erf(x)
