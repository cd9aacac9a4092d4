"""Hot counting loops.

``_ckernels`` (Cython) is used when it has been compiled; otherwise the numpy
implementation in ``_pykernels`` is used.  Set ``DMCURVES_KERNELS=python`` to
force the fallback.
"""

import os

from . import _pykernels as python_backend

try:
    if os.environ.get("DMCURVES_KERNELS", "").lower() in ("python", "numpy"):
        raise ImportError("fallback forced by environment")
    from . import _ckernels as compiled_backend
except ImportError:
    compiled_backend = None

backend = compiled_backend or python_backend
BACKEND = backend.BACKEND

poly_values = backend.poly_values
hyperelliptic_affine = backend.hyperelliptic_affine
plane_affine = backend.plane_affine
plane_common_zero = backend.plane_common_zero
genus2_scan = backend.genus2_scan

__all__ = [
    "BACKEND",
    "backend",
    "compiled_backend",
    "python_backend",
    "poly_values",
    "hyperelliptic_affine",
    "plane_affine",
    "plane_common_zero",
    "genus2_scan",
]
