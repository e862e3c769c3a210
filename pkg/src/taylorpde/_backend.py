"""Kernel backend selection.

Prefers the compiled extension and falls back to the pure-Python kernels
when the extension was not built.  Both expose the same functions with
bitwise-identical results, so the choice only affects speed.  BACKEND
names the one in use.
"""

try:
    from . import _kernels as _impl  # type: ignore[attr-defined]
except ImportError:
    from . import _kernels_py as _impl  # type: ignore[no-redef]

conv = _impl.conv
series_product = _impl.series_product
BACKEND = _impl.BACKEND
