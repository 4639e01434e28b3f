"""The blended two/three-point rule family, its kernel and error term,
composite versions, and the interval-mean (Mercer-type) and classical
trapezoid reference rules.

The family evaluates, for a node x and blend weight alpha in [0, 1],

    (1-alpha)*{[u(m)-u(a)]*f(x) + [u(b)-u(m)]*f(a+b-x)}
      + alpha*{(u(x)-u(a))*f(a) + (u(b)-u(x))*f(b)},    m = (a+b)/2,

which interpolates between a two-point rule (alpha=0) and a generalized
trapezoid rule (alpha=1); alpha=1/3 is a Simpson-like three-point rule.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NodeRangeError
from .oracle import DEFAULT_TOL, interval_mean, rs_integral

PHI_FAMILY = "phi-family"
MERCER_TRAPEZOID = "mercer-trapezoid"
MERCER_THREE_POINT = "mercer-three-point"
CLASSICAL_TRAPEZOID = "classical-trapezoid"

RULE_KINDS = (PHI_FAMILY, MERCER_TRAPEZOID, MERCER_THREE_POINT,
              CLASSICAL_TRAPEZOID)

# slack for node-range checks, relative to the interval width; absorbs
# rounding in caller-computed midpoints
_RANGE_SLACK = 1e-12


@dataclass(frozen=True)
class RuleSpec:
    kind: str
    alpha: float | None = None
    x: float | None = None

    def __post_init__(self):
        if self.kind not in RULE_KINDS:
            raise ValueError("unknown rule kind %r" % self.kind)
        if self.kind == PHI_FAMILY:
            if self.alpha is None or self.x is None:
                raise ValueError("phi-family rule requires alpha and x")
            if not 0.0 <= self.alpha <= 1.0:
                raise ValueError("alpha must lie in [0, 1]")
        elif self.kind == MERCER_THREE_POINT and self.x is None:
            raise ValueError("mercer-three-point rule requires x")

    def validate_node(self, iv):
        slack = _RANGE_SLACK * iv.width
        if self.kind == PHI_FAMILY:
            hi = iv.b if self.alpha == 1.0 else iv.midpoint
            if not (iv.a - slack <= self.x <= hi + slack):
                raise NodeRangeError(
                    "node x=%r outside [%r, %r] for alpha=%r"
                    % (self.x, iv.a, hi, self.alpha)
                )
        elif self.kind == MERCER_THREE_POINT:
            if not (iv.a < self.x < iv.b):
                raise NodeRangeError(
                    "node x=%r must be interior to [%r, %r]"
                    % (self.x, iv.a, iv.b)
                )

    def to_jsonable(self):
        out = {"kind": self.kind}
        if self.alpha is not None:
            out["alpha"] = self.alpha
        if self.x is not None:
            out["x"] = self.x
        return out


@dataclass
class QuadratureResult:
    value: float
    rule: RuleSpec
    oracle_value: float | None = None
    actual_error: float | None = None
    oracle_converged: bool = True


def _check_phi_node(iv, alpha, x):
    RuleSpec(PHI_FAMILY, alpha=float(alpha), x=float(x)).validate_node(iv)


def phi_alpha(f, u, iv, alpha, x):
    """Evaluate the blended rule at node x with weight alpha."""
    _check_phi_node(iv, alpha, x)
    a, b = iv.a, iv.b
    m = iv.midpoint
    two_point = (u.eval(m) - u.eval(a)) * f.eval(x) + (
        u.eval(b) - u.eval(m)
    ) * f.eval(a + b - x)
    trapezoid = (u.eval(x) - u.eval(a)) * f.eval(a) + (
        u.eval(b) - u.eval(x)
    ) * f.eval(b)
    return (1.0 - alpha) * two_point + alpha * trapezoid


class KernelFunction:
    """The rule's Peano-type kernel S(t; x) as an oracle evaluatable.

    Piecewise, with half-open branch selection:
      t in [a, x]:          (1-alpha)*[u(t)-u(a)] + alpha*[u(t)-u(x)]
      t in (x, a+b-x]:      (1-alpha)*[u(t)-u(m)] + alpha*[u(t)-u(x)]
      t in (a+b-x, b]:      (1-alpha)*[u(t)-u(b)] + alpha*[u(t)-u(x)]
    Its RS integral against df equals phi_alpha minus the true integral.
    """

    def __init__(self, u, iv, alpha, x):
        _check_phi_node(iv, alpha, x)
        self.u = u
        self.iv = iv
        self.alpha = float(alpha)
        self.x = float(x)
        self._ua = u.eval(iv.a)
        self._um = u.eval(iv.midpoint)
        self._ub = u.eval(iv.b)
        self._ux = u.eval(self.x)

    def _offsets(self, ts):
        x = self.x
        reflected = self.iv.a + self.iv.b - x
        first = np.where(ts <= x, self._ua, self._um)
        return np.where(ts <= reflected, first, self._ub)

    def eval_array(self, ts):
        ts = np.asarray(ts, dtype=np.float64)
        if (ts < self.iv.a).any() or (ts > self.iv.b).any():
            raise ValueError("kernel argument outside [a, b]")
        ut = self.u.eval_array(ts)
        return (1.0 - self.alpha) * (ut - self._offsets(ts)) + self.alpha * (
            ut - self._ux
        )

    def eval(self, t):
        return float(self.eval_array(np.array([float(t)]))[0])

    __call__ = eval


def kernel_value(u, iv, alpha, x, t):
    """Kernel S(t; x) at a single point t in [a, b]."""
    return KernelFunction(u, iv, alpha, x).eval(t)


def error_term(f, u, iv, alpha, x, tol=DEFAULT_TOL, breakpoints=()):
    """Rule value, oracle value, and their difference (the actual error)."""
    value = phi_alpha(f, u, iv, alpha, x)
    oracle = rs_integral(f, u, iv, tol, breakpoints)
    return QuadratureResult(
        value=value,
        rule=RuleSpec(PHI_FAMILY, alpha=float(alpha), x=float(x)),
        oracle_value=oracle.value,
        actual_error=value - oracle.value,
        oracle_converged=oracle.converged,
    )


def _pairwise_sum(values):
    """Deterministic left-to-right pairwise reduction."""
    vals = list(values)
    if not vals:
        return 0.0
    while len(vals) > 1:
        nxt = [
            vals[i] + vals[i + 1] if i + 1 < len(vals) else vals[i]
            for i in range(0, len(vals), 2)
        ]
        vals = nxt
    return vals[0]


def composite_phi_alpha(f, u, iv, panels, alpha, theta):
    """Composite rule over a uniform partition into `panels` panels.

    theta in [0, 1/2] places the node in each panel at
    x_i = a_i + theta*(b_i - a_i), so every panel uses a geometrically
    similar rule.
    """
    if panels < 1:
        raise ValueError("panels must be >= 1")
    if not 0.0 <= theta <= 0.5:
        raise ValueError("theta must lie in [0, 1/2]")
    from .oracle import Interval

    a, b = iv.a, iv.b
    edges = np.linspace(a, b, panels + 1)
    parts = []
    for i in range(panels):
        sub = Interval(edges[i], edges[i + 1])
        parts.append(phi_alpha(f, u, sub, alpha, sub.a + theta * sub.width))
    return _pairwise_sum(parts)


def mercer_trapezoid(f, g, iv, tol=DEFAULT_TOL):
    """Trapezoid-type rule with interval-mean weights:
    [G - g(a)]*f(a) + [g(b) - G]*f(b), G the mean of g over iv."""
    G = interval_mean(g, iv, tol)
    return (G - g.eval(iv.a)) * f.eval(iv.a) + (g.eval(iv.b) - G) * f.eval(iv.b)


def mercer_three_point(f, g, iv, x, tol=DEFAULT_TOL):
    """Three-point rule with interval-mean weights on [a,x] and [x,b]."""
    RuleSpec(MERCER_THREE_POINT, x=float(x)).validate_node(iv)
    from .oracle import Interval

    Gax = interval_mean(g, Interval(iv.a, x), tol)
    Gxb = interval_mean(g, Interval(x, iv.b), tol)
    return (
        (Gax - g.eval(iv.a)) * f.eval(iv.a)
        + (Gxb - Gax) * f.eval(x)
        + (g.eval(iv.b) - Gxb) * f.eval(iv.b)
    )


def classical_trapezoid(f, iv):
    """Main term (b-a)*(f(a)+f(b))/2 of the classical trapezoid rule.

    The textbook correction -(b-a)^3/12*f''(xi) involves an existential
    xi and is deliberately not computed.
    """
    return iv.width * (f.eval(iv.a) + f.eval(iv.b)) / 2.0
