"""Import-time selection between the compiled kernels and the numpy fallback."""
import os

from . import _fallback

kernels = _fallback
if os.environ.get("CHEREDNIK_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as kernels  # noqa: F811
    except ImportError:  # extension not built
        kernels = _fallback

BACKEND = kernels.BACKEND
