"""Minkowski-to-Rindler mode map for a fermionic qubit.

A Minkowski mode splits into a region-I mode (the accelerated receiver,
"Rob") and a causally disconnected region-II mode ("anti-Rob")::

    |0>_M -> cos r |0>_I |0>_II + sin r |1>_I |1>_II
    |1>_M -> |1>_I |0>_II

with ``0 <= r <= pi/4``. Region II is always traced out right away.
"""

import math

import numpy as np

from .linalg import DensityMatrix, as_density, dagger, kron, partial_trace
from .states import I2, werner

R_MAX = math.pi / 4
_R_SLACK = 1e-12


def check_r(r):
    r = float(r)
    if not (0.0 <= r <= R_MAX + _R_SLACK):
        raise ValueError(f"acceleration parameter r must lie in [0, pi/4], got {r!r}")
    return min(r, R_MAX)


def mode_isometry(r):
    """4x2 isometry taking a Minkowski qubit to the (I, II) mode pair."""
    r = check_r(r)
    v = np.zeros((4, 2), dtype=np.complex128)
    v[0, 0] = math.cos(r)
    v[3, 0] = math.sin(r)
    v[2, 1] = 1.0
    return v


def accelerate_second_qubit(rho, r):
    """Map a two-qubit state to the three-mode state ordered (A, I, II)."""
    rho = as_density(rho)
    if rho.qubit_count != 2:
        raise ValueError(f"expected a 2-qubit state, got {rho.qubit_count} qubits")
    u = kron(I2, mode_isometry(r))
    return DensityMatrix(u @ rho.matrix @ dagger(u))


def alice_rob_state(p, r):
    """Werner channel shared with an accelerated receiver, region II traced out."""
    return partial_trace(accelerate_second_qubit(werner(p), r), 2)


def alice_rob_matrix(p, r):
    """Closed-form 4x4 matrix of :func:`alice_rob_state` (used for cross-checks)."""
    c, s = math.cos(r), math.sin(r)
    c2, s2 = c * c, s * s
    m = np.zeros((4, 4), dtype=np.complex128)
    m[0, 0] = (1 + p) * c2
    m[1, 1] = 1 + s2 - p * c2
    m[2, 2] = (1 - p) * c2
    m[3, 3] = 1 + s2 + p * c2
    m[0, 3] = m[3, 0] = 2 * p * c
    return m / 4
