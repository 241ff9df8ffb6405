"""Backend selection for the hot fitting kernels.

Prefers the compiled extension (``iwsurv._ckernels``) when it has been built,
falling back to the pure-Python twin otherwise. ``IWSURV_BACKEND`` overrides:
``python`` forces the fallback, ``compiled`` makes a missing extension an
import error, anything else (or unset) means auto.
"""

import os

from . import _kernels_py

_requested = os.environ.get("IWSURV_BACKEND", "auto").lower()

if _requested == "python":
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        if _requested == "compiled":
            raise ImportError(
                "IWSURV_BACKEND=compiled but the C extension is not built; "
                "run `pip install -e .` or `python setup.py build_ext --inplace`")
        _impl = _kernels_py

BACKEND = _impl.BACKEND_NAME

fit_weibull = _impl.fit_weibull
fit_iw = _impl.fit_iw
fit_ll = _impl.fit_ll
ad_iw = _impl.ad_iw
ad_ll = _impl.ad_ll
loglik_iw = _impl.loglik_iw
loglik_ll = _impl.loglik_ll
replicate_battery = _impl.replicate_battery


def available_backends():
    """Names of the kernel implementations importable in this environment."""
    names = ["python"]
    try:
        from . import _ckernels  # noqa: F401
        names.append("compiled")
    except ImportError:
        pass
    return names


def get_backend(name):
    """Return the kernel module for ``name`` ('python' or 'compiled')."""
    if name == "python":
        return _kernels_py
    if name == "compiled":
        from . import _ckernels
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
