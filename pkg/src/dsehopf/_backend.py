"""Pick the compiled kernel when it was built, else the pure-Python twin.

Set ``DSEHOPF_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("DSEHOPF_PURE_PYTHON"):
    from . import _kernel_py as kernel
    COMPILED = False
else:
    try:
        from . import _kernel as kernel
        COMPILED = True
    except ImportError:
        from . import _kernel_py as kernel
        COMPILED = False

__all__ = ["kernel", "COMPILED"]
