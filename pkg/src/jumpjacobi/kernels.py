"""Backend selection for the numerical kernels.

The compiled extension ``_ckernels`` is used when it imports; otherwise the
numpy twin ``_pykernels`` is used.  Setting ``JUMPJACOBI_PURE_PYTHON=1`` in
the environment forces the numpy path.
"""

import os

from . import _pykernels

if os.environ.get("JUMPJACOBI_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "compiled" if _impl is not _pykernels else "python"

hyp1f1_series = _impl.hyp1f1_series
recurrence_eval = _impl.recurrence_eval
stieltjes = _impl.stieltjes


def get_backend(name):
    """Return the kernel module named ``"compiled"`` or ``"python"``."""
    if name == "python":
        return _pykernels
    if name == "compiled":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
