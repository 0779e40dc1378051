"""Hot numerical kernels with a compiled core and a numpy fallback.

The compiled extension ``_ckernels`` is used when it was built; otherwise the
numpy implementations in ``_python`` are selected at import time. Both
modules expose:

jacobi_eigh
    Hermitian eigendecomposition by cyclic complex Jacobi rotations.
conditional_entropy_grid
    Post-measurement conditional entropy of qubit A over a grid of
    projective measurements on qubit B.
"""

from . import _python

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _python}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

BACKEND = "cython" if _ckernels is not None else "python"
_impl = _BACKENDS[BACKEND]

jacobi_eigh = _impl.jacobi_eigh
conditional_entropy_grid = _impl.conditional_entropy_grid


def available_backends():
    return sorted(_BACKENDS)


def get_backend(name):
    """Return the kernel module for ``name`` ("python" or "cython")."""
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"kernel backend {name!r} not available; have {available_backends()}"
        ) from None
