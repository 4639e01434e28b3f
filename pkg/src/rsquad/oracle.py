"""Reference integration: the ground truth the rules and bounds are tested
against.

riemann_integral is an adaptive Simpson integrator with Richardson error
estimation; accepted panels contribute their extrapolated value, so the
returned value is usually far more accurate than the requested tolerance.
rs_integral evaluates Riemann-Stieltjes sums with midpoint tags over
dyadic refinements of a partition seeded with the caller's breakpoints,
and cross-checks against Simpson on f*u' whenever the integrator has a
symbolic derivative and no breakpoints.
"""

from dataclasses import dataclass

import numpy as np

from .errors import OracleConvergenceError
from .expr.function import ScalarFunction
from .expr.nodes import mul
from .special import erf  # noqa: F401  (re-exported oracle operation)

DEFAULT_TOL = 1e-10

_MAX_SIMPSON_DEPTH = 48
_MAX_RS_LEVELS = 22
_INIT_PANELS = 8
_CROSS_CHECK_SLACK = 50.0


@dataclass(frozen=True)
class Interval:
    a: float
    b: float

    def __post_init__(self):
        a = float(self.a)
        b = float(self.b)
        if not (np.isfinite(a) and np.isfinite(b)):
            raise ValueError("interval endpoints must be finite")
        if not a < b:
            raise ValueError("interval requires a < b, got [%r, %r]" % (a, b))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def width(self):
        return self.b - self.a

    @property
    def midpoint(self):
        return 0.5 * (self.a + self.b)


@dataclass
class OracleResult:
    value: float
    achieved_tolerance: float
    evaluations: int
    converged: bool


def riemann_integral(w, iv, tol=DEFAULT_TOL):
    """Adaptive Simpson integral of w over iv to absolute tolerance tol.

    Panels whose Richardson estimate passes their share of tol contribute
    the extrapolated (error-corrected) Simpson value.  Returns
    converged=False with the best value if the depth limit is hit.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a, b = iv.a, iv.b
    width = iv.width

    edges = np.linspace(a, b, _INIT_PANELS + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    fe = w.eval_array(edges)
    fm = w.eval_array(mids)
    evals = edges.size + mids.size

    A = edges[:-1].copy()
    H = np.diff(edges)
    FA = fe[:-1].copy()
    FB = fe[1:].copy()
    FM = fm
    S = H / 6.0 * (FA + 4.0 * FM + FB)

    total = 0.0
    achieved = 0.0
    converged = True

    for depth in range(_MAX_SIMPSON_DEPTH):
        if A.size == 0:
            break
        n = A.size
        pts = np.empty(2 * n)
        pts[0::2] = A + 0.25 * H
        pts[1::2] = A + 0.75 * H
        fv = w.eval_array(pts)
        evals += pts.size
        flm = fv[0::2]
        frm = fv[1::2]
        Sl = H / 12.0 * (FA + 4.0 * flm + FM)
        Sr = H / 12.0 * (FM + 4.0 * frm + FB)
        S2 = Sl + Sr
        err = (S2 - S) / 15.0

        done = np.abs(err) <= tol * (H / width)
        if depth == _MAX_SIMPSON_DEPTH - 1 and not done.all():
            converged = False
            done = np.ones_like(done)

        total += float(np.sum(S2[done] + err[done]))
        achieved += float(np.sum(np.abs(err[done])))

        keep = ~done
        k = int(keep.sum())
        if k == 0:
            A = A[:0]
            continue
        halfH = 0.5 * H[keep]
        A2 = np.empty(2 * k)
        A2[0::2] = A[keep]
        A2[1::2] = A[keep] + halfH
        H2 = np.repeat(halfH, 2)
        FA2 = np.empty(2 * k)
        FA2[0::2] = FA[keep]
        FA2[1::2] = FM[keep]
        FB2 = np.empty(2 * k)
        FB2[0::2] = FM[keep]
        FB2[1::2] = FB[keep]
        FM2 = np.empty(2 * k)
        FM2[0::2] = flm[keep]
        FM2[1::2] = frm[keep]
        S2_ = np.empty(2 * k)
        S2_[0::2] = Sl[keep]
        S2_[1::2] = Sr[keep]
        A, H, FA, FB, FM, S = A2, H2, FA2, FB2, FM2, S2_

    return OracleResult(total, achieved, evals, converged)


def _check_breakpoints(breakpoints, iv):
    bps = sorted(set(float(c) for c in breakpoints))
    for c in bps:
        if not (iv.a < c < iv.b):
            raise ValueError(
                "breakpoint %r is not interior to [%r, %r]" % (c, iv.a, iv.b)
            )
    return bps


def _rs_refine(f, u, iv, tol, bps):
    """Midpoint-tagged RS sums over dyadic refinements of the seeded
    partition.  Interior breakpoints c contribute f(c)*(u(c+eps)-u(c-eps))
    with eps = 1e-12*(b-a); the open segments between seeds are integrated
    with their endpoints nudged inward by eps at breakpoint ends."""
    eps = 1e-12 * iv.width
    seeds = [iv.a] + bps + [iv.b]
    segs = []
    for left, right in zip(seeds[:-1], seeds[1:]):
        lad = left + eps if left in bps else left
        rad = right - eps if right in bps else right
        segs.append((lad, rad))

    evals = 0
    jump_total = 0.0
    if bps:
        cs = np.asarray(bps)
        u_hi = u.eval_array(cs + eps)
        u_lo = u.eval_array(cs - eps)
        f_c = f.eval_array(cs)
        jump_total = float(np.dot(f_c, u_hi - u_lo))
        evals += 3 * len(bps)

    prev = None
    value = None
    achieved = np.inf
    converged = False
    for level in range(_MAX_RS_LEVELS + 1):
        panels = 1 << level
        total = jump_total
        for lad, rad in segs:
            edges = np.linspace(lad, rad, panels + 1)
            ue = u.eval_array(edges)
            mids = 0.5 * (edges[:-1] + edges[1:])
            fm = f.eval_array(mids)
            evals += edges.size + mids.size
            total += float(np.dot(fm, np.diff(ue)))
        value = total
        if prev is not None:
            achieved = abs(value - prev)
            if achieved < tol:
                converged = True
                break
        prev = value
    return OracleResult(value, achieved, evals, converged)


def rs_integral(f, u, iv, tol=DEFAULT_TOL, breakpoints=()):
    """Riemann-Stieltjes integral of f against u over iv.

    breakpoints lists the known discontinuities/kinks of u interior to
    the interval; the oracle never searches for jumps.  With a smooth
    symbolic integrator and no breakpoints the refined RS sum is
    cross-checked against Simpson on f*u' and the (more accurate)
    Simpson value is returned.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    bps = _check_breakpoints(breakpoints, iv)

    du = None
    if not bps and isinstance(f, ScalarFunction) and isinstance(u, ScalarFunction):
        du = u.try_derivative(1)

    if du is None:
        return _rs_refine(f, u, iv, tol, bps)

    product = ScalarFunction(mul(f.root, du.root))
    simpson = riemann_integral(product, iv, tol)
    sums = _rs_refine(f, u, iv, tol, bps)
    diff = abs(simpson.value - sums.value)
    ok = diff <= _CROSS_CHECK_SLACK * tol
    return OracleResult(
        value=simpson.value,
        achieved_tolerance=simpson.achieved_tolerance if ok else diff,
        evaluations=simpson.evaluations + sums.evaluations,
        converged=simpson.converged and sums.converged and ok,
    )


def interval_mean(g, iv, tol=DEFAULT_TOL):
    """Mean value of g over iv: integral divided by the length."""
    res = riemann_integral(g, iv, tol * iv.width)
    if not res.converged:
        raise OracleConvergenceError(
            "interval mean of %s over [%r, %r] did not converge"
            % (g, iv.a, iv.b)
        )
    return res.value / iv.width
