"""Backend selection: compiled core when available, numpy fallback otherwise.

Set RSQUAD_PURE_PYTHON=1 to force the fallback.  The selected backend's
name is exposed as BACKEND; rsquad.backend.pure is always importable for
side-by-side benchmarking.
"""

import os

from . import pure
from .programs import Program  # noqa: F401  (re-export)

_FORCE_PURE = os.environ.get("RSQUAD_PURE_PYTHON", "") not in ("", "0")

_core = None
if not _FORCE_PURE:
    try:
        from . import _evalcore as _core
    except ImportError:
        _core = None

BACKEND = _core.NAME if _core is not None else pure.NAME


def eval_program(prog, ts):
    """Evaluate a Program over an array of points with the active backend."""
    if _core is not None and prog.stack_need <= _core.MAX_STACK_DEPTH:
        return _core.eval_program(prog, ts)
    return pure.eval_program(prog, ts)


def eval_scalar(prog, t):
    """Evaluate a Program at one point with the active backend."""
    if _core is not None and prog.stack_need <= _core.MAX_STACK_DEPTH:
        return _core.eval_scalar(prog, t)
    return pure.eval_scalar(prog, t)
