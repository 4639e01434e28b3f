"""ScalarFunction: an evaluatable function of one real variable.

Wraps an expression tree with a lazily-compiled program, an optional
domain hint, and a cache of symbolic derivatives.  Instances are
immutable from the caller's perspective and safe to share across
threads (the lazy caches are idempotent).
"""

import numpy as np

from .. import backend
from ..errors import NonDifferentiableError
from .compile import compile_expression
from .deriv import differentiate
from .nodes import ExprNode, const, contains_variable
from .parser import parse_expression
from .printer import print_expression


class ScalarFunction:
    def __init__(self, root, domain=None):
        if not isinstance(root, ExprNode):
            raise TypeError("root must be an ExprNode")
        self.root = root
        self.domain = domain
        self._program = None
        self._derivs = []  # index k holds the (k+1)-th derivative tree

    @classmethod
    def from_text(cls, source, domain=None):
        return cls(parse_expression(source), domain=domain)

    @classmethod
    def constant(cls, value):
        return cls(const(value))

    @property
    def program(self):
        if self._program is None:
            self._program = compile_expression(self.root)
        return self._program

    def eval(self, t):
        """Evaluate at one point; raises EvaluationError on domain faults."""
        return backend.eval_scalar(self.program, t)

    __call__ = eval

    def eval_array(self, ts):
        """Evaluate over a float array of points."""
        return backend.eval_program(self.program, np.asarray(ts, dtype=np.float64))

    def derivative_tree(self, n=1):
        """The n-th derivative as a tree, computed once and cached."""
        if n < 1:
            raise ValueError("derivative order must be >= 1")
        while len(self._derivs) < n:
            base = self._derivs[-1] if self._derivs else self.root
            self._derivs.append(differentiate(base, 1))
        return self._derivs[n - 1]

    def derivative(self, n=1):
        """The n-th derivative as a ScalarFunction."""
        return ScalarFunction(self.derivative_tree(n), domain=self.domain)

    def try_derivative(self, n=1):
        """derivative(n), or None if the tree is not differentiable."""
        try:
            return self.derivative(n)
        except NonDifferentiableError:
            return None

    def is_constant(self):
        return not contains_variable(self.root)

    def constant_value(self):
        """The value of a constant function, or None."""
        if not self.is_constant():
            return None
        return self.eval(0.0)

    def __str__(self):
        return print_expression(self.root)

    def __repr__(self):
        return "ScalarFunction(%s)" % print_expression(self.root)
