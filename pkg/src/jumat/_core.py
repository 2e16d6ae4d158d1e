"""Kernel backend selection.

The compiled kernel is preferred when its extension module imports; the
pure-Python kernel is the fallback.  Set ``JUMAT_BACKEND=python`` (or
``cython``) to force a choice; forcing the compiled backend raises if the
extension was never built.
"""

import os

_requested = os.environ.get("JUMAT_BACKEND", "").strip().lower()

if _requested in {"py", "python", "pure"}:
    from jumat import _core_py as _impl
elif _requested in {"c", "cy", "cython", "compiled", "native"}:
    from jumat import _core_cy as _impl  # type: ignore[no-redef]
else:
    try:
        from jumat import _core_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        from jumat import _core_py as _impl

BACKEND = _impl.BACKEND_NAME

ZERO = _impl.ZERO
ONE = _impl.ONE
canon = _impl.canon
add = _impl.add
sub = _impl.sub
mul = _impl.mul
neg = _impl.neg
conj = _impl.conj
inv = _impl.inv
div = _impl.div
is_zero = _impl.is_zero
mat_is_zero = _impl.mat_is_zero
mat_mul = _impl.mat_mul
matpoly_mul = _impl.matpoly_mul
