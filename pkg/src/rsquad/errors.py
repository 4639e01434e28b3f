"""Exception types shared across the package."""


class ExpressionError(ValueError):
    """Base class for expression language errors."""


class ExpressionSyntaxError(ExpressionError):
    """Source text does not match the expression grammar."""

    def __init__(self, message, position):
        super().__init__("syntax error at position %d: %s" % (position, message))
        self.position = position


class UnknownIdentifierError(ExpressionError):
    """Identifier is neither the variable t nor a builtin function."""

    def __init__(self, name, position):
        super().__init__(
            "unknown identifier %r at position %d" % (name, position)
        )
        self.name = name
        self.position = position


class EvaluationError(ArithmeticError):
    """Expression evaluation hit a domain error or a non-finite value."""


class NonDifferentiableError(ExpressionError):
    """Symbolic differentiation reached a non-differentiable node."""

    def __init__(self, variant):
        super().__init__("cannot differentiate %r node" % variant)
        self.variant = variant


class NodeRangeError(ValueError):
    """Quadrature node x lies outside the admissible range for the rule."""


class OracleConvergenceError(RuntimeError):
    """Reference integration failed to reach the requested tolerance."""


class ConfigError(ValueError):
    """Experiment configuration failed schema validation."""
