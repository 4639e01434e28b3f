"""Regularity certificates: Lipschitz/Hoelder constants, total variation,
and L^p norms of functions and their derivatives.

Values are either user-declared ("exact") or numerically estimated
("estimated").  Grid-based estimates are suprema over finite samples and
therefore biased low; the bounds module compensates with a configurable
safety factor for estimated certificates.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import OracleConvergenceError
from .expr.nodes import const, fold_pow, func
from .expr.function import ScalarFunction
from .oracle import DEFAULT_TOL, riemann_integral

DEFAULT_LIPSCHITZ_SAMPLES = 2048
DEFAULT_HOLDER_SAMPLES = 512
_TV_MAX_LEVELS = 20
# refinements before the stop criterion may fire; guards against false
# plateaus when the coarse grids alias the function (e.g. sin on [0,2pi])
_TV_MIN_LEVELS = 6

EXACT = "exact"
ESTIMATED = "estimated"


@dataclass(frozen=True)
class CertValue:
    value: float
    provenance: str = EXACT
    detail: str = ""

    def __post_init__(self):
        v = float(self.value)
        if not (np.isfinite(v) and v >= 0.0):
            raise ValueError("certificate value must be finite and >= 0")
        if self.provenance not in (EXACT, ESTIMATED):
            raise ValueError("provenance must be 'exact' or 'estimated'")
        object.__setattr__(self, "value", v)


@dataclass
class RegularityCertificate:
    """Bag of regularity constants for one function."""

    lipschitz: CertValue | None = None
    holder: tuple[CertValue, float] | None = None  # (H, r), r in (0, 1]
    total_variation: CertValue | None = None
    deriv_norms: dict = field(default_factory=dict)  # (n, p) -> CertValue

    def __post_init__(self):
        if self.holder is not None:
            _, r = self.holder
            if not (0.0 < r <= 1.0):
                raise ValueError("Hoelder order r must lie in (0, 1]")

    def to_jsonable(self):
        out = {}
        if self.lipschitz is not None:
            out["lipschitz"] = _cert_jsonable(self.lipschitz)
        if self.holder is not None:
            h, r = self.holder
            entry = _cert_jsonable(h)
            entry["r"] = r
            out["holder"] = entry
        if self.total_variation is not None:
            out["total_variation"] = _cert_jsonable(self.total_variation)
        if self.deriv_norms:
            out["deriv_norms"] = [
                {"n": n, "p": p, **_cert_jsonable(cv)}
                for (n, p), cv in sorted(self.deriv_norms.items())
            ]
        return out


def _cert_jsonable(cv):
    return {"value": cv.value, "provenance": cv.provenance, "detail": cv.detail}


def lp_norm(w, p, iv, tol=DEFAULT_TOL):
    """L^p norm of w on iv: (integral of |w|^p)^(1/p), p >= 1."""
    if p < 1:
        raise ValueError("p must be >= 1")
    cval = w.constant_value() if isinstance(w, ScalarFunction) else None
    if cval is not None:
        return CertValue(
            abs(cval) * iv.width ** (1.0 / p),
            EXACT,
            "constant integrand, closed form",
        )
    integrand = ScalarFunction(fold_pow(func("abs", w.root), const(float(p))))
    res = riemann_integral(integrand, iv, tol)
    if not res.converged:
        raise OracleConvergenceError(
            "L^%g norm quadrature did not converge on [%r, %r]"
            % (p, iv.a, iv.b)
        )
    return CertValue(
        max(res.value, 0.0) ** (1.0 / p),
        ESTIMATED,
        "adaptive quadrature of |w|^p, tol=%g, %d evaluations"
        % (tol, res.evaluations),
    )


def deriv_norm(f, n, p, iv, tol=DEFAULT_TOL):
    """L^p norm of the symbolic n-th derivative of f on iv."""
    return lp_norm(f.derivative(n), p, iv, tol)


def _tv_iter(f, iv, breakpoints, max_levels):
    """Yield (points_used, running_best) for successive dyadic
    refinements of the seeded partition.  Each level's partition
    contains the previous one's points, so the sums are nondecreasing
    up to rounding; the running max makes monotonicity exact."""
    seeds = [iv.a] + sorted(set(float(c) for c in breakpoints)) + [iv.b]
    for c in seeds:
        if not (iv.a <= c <= iv.b):
            raise ValueError("breakpoint %r outside [%r, %r]" % (c, iv.a, iv.b))
    best = 0.0
    for level in range(max_levels + 1):
        pieces = 1 << level
        pts = np.unique(
            np.concatenate(
                [np.linspace(lo, hi, pieces + 1)
                 for lo, hi in zip(seeds[:-1], seeds[1:])]
            )
        )
        vals = f.eval_array(pts)
        best = max(best, float(np.sum(np.abs(np.diff(vals)))))
        yield pts.size, best


def _tv_levels(f, iv, breakpoints=(), max_levels=_TV_MAX_LEVELS):
    """Per-level TV estimates, exposed for the refinement-monotonicity
    property test."""
    return [best for _, best in _tv_iter(f, iv, breakpoints, max_levels)]


def estimate_total_variation(f, iv, tol=1e-8, breakpoints=()):
    """Total variation of f on iv by partition refinement.

    The estimate converges from below; refinement stops when the
    relative change drops under tol.
    """
    prev = None
    for level, (npts, best) in enumerate(_tv_iter(f, iv, breakpoints, _TV_MAX_LEVELS)):
        if (
            level >= _TV_MIN_LEVELS
            and prev is not None
            and best - prev < tol * max(1.0, best)
        ):
            return CertValue(
                best,
                ESTIMATED,
                "partition refinement to %d points; lower-bound-converging "
                "estimate" % npts,
            )
        prev = best
    raise OracleConvergenceError(
        "total variation estimate did not settle within %d dyadic levels"
        % _TV_MAX_LEVELS
    )


def difference_quotient_max(f, iv, samples):
    """Max |f(t_{i+1})-f(t_i)| / (t_{i+1}-t_i) over a uniform grid."""
    pts = np.linspace(iv.a, iv.b, samples)
    vals = f.eval_array(pts)
    return float(np.max(np.abs(np.diff(vals) / np.diff(pts))))


def estimate_lipschitz(f, iv, samples=DEFAULT_LIPSCHITZ_SAMPLES):
    """Lipschitz constant of f on iv.

    Uses max |f'| over a uniform grid (refined once by doubling) when f
    is symbolically differentiable, adjacent difference quotients
    otherwise.
    """
    df = f.try_derivative(1) if isinstance(f, ScalarFunction) else None
    if df is not None:
        m = 0.0
        for n in (samples, 2 * samples):
            pts = np.linspace(iv.a, iv.b, n)
            m = max(m, float(np.max(np.abs(df.eval_array(pts)))))
        return CertValue(
            m, ESTIMATED, "max |f'| over %d-point grid, doubled once" % samples
        )
    m = max(
        difference_quotient_max(f, iv, samples),
        difference_quotient_max(f, iv, 2 * samples),
    )
    return CertValue(
        m,
        ESTIMATED,
        "max adjacent difference quotient over %d-point grid, doubled once"
        % samples,
    )


def estimate_holder(f, r, iv, samples=DEFAULT_HOLDER_SAMPLES):
    """Hoelder constant of order r: max |f(y)-f(z)| / |y-z|^r over all
    grid pairs."""
    if not (0.0 < r <= 1.0):
        raise ValueError("Hoelder order r must lie in (0, 1]")
    pts = np.linspace(iv.a, iv.b, samples)
    vals = f.eval_array(pts)
    dv = np.abs(vals[:, None] - vals[None, :])
    dt = np.abs(pts[:, None] - pts[None, :])
    iu = np.triu_indices(samples, k=1)
    quot = dv[iu] / dt[iu] ** r
    return CertValue(
        float(np.max(quot)),
        ESTIMATED,
        "max pairwise quotient over %d-point grid (%d pairs)"
        % (samples, iu[0].size),
    )
