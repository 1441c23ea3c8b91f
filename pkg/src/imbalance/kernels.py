"""Backend selection for the poset kernels.

The compiled module is used when it was built; otherwise the pure-Python
module takes over with identical results.
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

DEFAULT_BACKEND = "cython" if _ckernels is not None else "python"

# widest scaled Kraft profile entry the int64 kernels accept
INT64_PROFILE_BITS = 62


def get(name=None):
    if name is None:
        name = DEFAULT_BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable kernel backend {name!r}; have {sorted(BACKENDS)}") from None
