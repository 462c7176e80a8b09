"""Kernel selection for the exhaustive labeled-graph sweep.

The compiled extension is preferred when present; the numpy fallback
implements the identical contract.  Set INDLAB_FORCE_PY=1 to force the
fallback (used by the benchmark and the parity tests).
"""

import os

from . import pyfallback

try:
    from . import _sweep as _compiled
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None

if os.environ.get("INDLAB_FORCE_PY") == "1" or _compiled is None:
    sweep_codes = pyfallback.sweep_codes
    BACKEND = "python"
else:
    sweep_codes = _compiled.sweep_codes
    BACKEND = "cython"


def backends() -> dict:
    """All importable sweep implementations, keyed by name."""
    out = {"python": pyfallback.sweep_codes}
    if _compiled is not None:
        out["cython"] = _compiled.sweep_codes
    return out
