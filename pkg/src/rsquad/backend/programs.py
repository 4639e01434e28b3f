"""Flat postfix programs: the compiled form of expression trees.

Expression trees are walked once into a stack program (opcode array +
constant table).  Both backends execute the same program, so a tree
compiles once and evaluates anywhere.
"""

import numpy as np

PUSH_CONST = 0
PUSH_T = 1
ADD = 2
SUB = 3
MUL = 4
DIV = 5
POW = 6
NEG = 7
EXP = 8
LN = 9
SIN = 10
COS = 11
SQRT = 12
ABS = 13
ERF = 14

# error codes shared with the compiled kernel
ERR_LN_DOMAIN = 1
ERR_SQRT_DOMAIN = 2
ERR_DIV_ZERO = 3
ERR_POW_DOMAIN = 4
ERR_NONFINITE = 5

ERROR_MESSAGES = {
    ERR_LN_DOMAIN: "ln of a non-positive value",
    ERR_SQRT_DOMAIN: "sqrt of a negative value",
    ERR_DIV_ZERO: "division by zero",
    ERR_POW_DOMAIN: "power with negative base and non-integer exponent, "
    "or zero base and negative exponent",
    ERR_NONFINITE: "overflow to a non-finite value",
}


class Program:
    """Postfix opcode sequence with its constant table.

    args[i] indexes the constant table when codes[i] == PUSH_CONST and is
    unused otherwise.  stack_need is the exact evaluation stack depth,
    known at compile time.
    """

    __slots__ = ("codes", "args", "consts", "stack_need")

    def __init__(self, codes, args, consts, stack_need):
        self.codes = np.asarray(codes, dtype=np.int32)
        self.args = np.asarray(args, dtype=np.int32)
        self.consts = np.asarray(consts, dtype=np.float64)
        self.stack_need = int(stack_need)

    def __len__(self):
        return self.codes.shape[0]
