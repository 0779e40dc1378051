"""Mutual information, classical correlation, discord and log-negativity (bits)."""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from . import kernels
from .linalg import (
    as_density,
    eigvals_hermitian,
    partial_trace,
    partial_transpose,
    von_neumann_entropy,
)

GRID_THETA = 64
GRID_PHI = 64
SIMPLEX_FTOL = 1e-9
DISCORD_CLAMP = 1e-9
NEGATIVITY_CLAMP = 1e-10
MAX_RESTARTS = 5

_SWAP = np.eye(4, dtype=np.complex128)[[0, 2, 1, 3]]


@dataclass(frozen=True)
class MeasurementBasis:
    """Projective qubit measurement ``{|m><m|, I - |m><m|}``.

    ``|m> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>``.
    """

    theta: float
    phi: float

    @classmethod
    def canonical(cls, theta, phi):
        """Fold arbitrary angles into theta in [0, pi], phi in [0, 2 pi)."""
        theta = math.fmod(theta, 2 * math.pi)
        if theta < 0:
            theta += 2 * math.pi
        if theta > math.pi:
            # |m(2pi - t, f)> = -|m(t, f + pi)>
            theta = 2 * math.pi - theta
            phi += math.pi
        phi = math.fmod(phi, 2 * math.pi)
        if phi < 0:
            phi += 2 * math.pi
        return cls(theta, phi)

    @property
    def ket(self):
        return np.array(
            [math.cos(self.theta / 2), np.exp(1j * self.phi) * math.sin(self.theta / 2)],
            dtype=np.complex128,
        )

    def projectors(self):
        m = self.ket
        p0 = np.outer(m, m.conj())
        return p0, np.eye(2) - p0


@dataclass(frozen=True)
class CorrelationReport:
    mutual_information: float
    classical_correlation: float
    discord: float
    negativity: float
    optimizer_evals: int
    optimizer_argmax: MeasurementBasis
    measured_side: str = "B"


def _oriented(rho, side):
    """Return the matrix with the measured qubit in second position."""
    rho = as_density(rho)
    if rho.qubit_count != 2:
        raise ValueError(f"expected a 2-qubit state, got {rho.qubit_count} qubits")
    if side == "B":
        return rho.matrix
    if side == "A":
        return _SWAP @ rho.matrix @ _SWAP
    raise ValueError(f"measured side must be 'A' or 'B', got {side!r}")


def mutual_information(rho):
    rho = as_density(rho)
    s_a = von_neumann_entropy(partial_trace(rho, 1))
    s_b = von_neumann_entropy(partial_trace(rho, 0))
    return s_a + s_b - von_neumann_entropy(rho)


def classical_correlation(rho, side="B"):
    """Maximal information about the unmeasured qubit gained by measuring ``side``.

    Returns ``(value, argmax)`` where ``argmax`` is the optimal MeasurementBasis.
    """
    value, argmax, _ = _maximize_measurement(rho, side)
    return value, argmax


def _maximize_measurement(rho, side):
    # coarse grid over the Bloch sphere, then Nelder-Mead from the best cell
    # until the simplex values agree to SIMPLEX_FTOL
    m = _oriented(rho, side)
    s_kept = von_neumann_entropy(partial_trace(as_density(m), 1))

    thetas = np.linspace(0.0, math.pi, GRID_THETA)
    phis = np.linspace(0.0, 2 * math.pi, GRID_PHI, endpoint=False)
    cond = kernels.conditional_entropy_grid(m, thetas, phis)
    it, jf = np.unravel_index(np.argmin(cond), cond.shape)
    x0 = np.array([thetas[it], phis[jf]])
    best_cond = float(cond[it, jf])

    def objective(x):
        return float(kernels.conditional_entropy_grid(m, x[:1], x[1:])[0, 0])

    # half-cell offsets keep the first simplex off grid symmetries, where all
    # three vertices can tie and the value-spread test passes immediately
    step = np.array([thetas[1] - thetas[0], phis[1] - phis[0]]) / 2
    evals = cond.size
    for _ in range(MAX_RESTARTS):
        simplex = np.array([x0, x0 + [step[0], 0.0], x0 + [0.0, step[1]]])
        res = minimize(
            objective,
            x0,
            method="Nelder-Mead",
            options={"initial_simplex": simplex, "fatol": SIMPLEX_FTOL, "xatol": np.inf, "maxiter": 2000},
        )
        evals += int(res.nfev)
        if res.fun >= best_cond - SIMPLEX_FTOL:
            if res.fun < best_cond:
                best_cond, x0 = float(res.fun), res.x
            break
        best_cond, x0 = float(res.fun), res.x
        step = step / 4
    value = max(s_kept - best_cond, 0.0)
    return value, MeasurementBasis.canonical(float(x0[0]), float(x0[1])), evals


def negativity(rho):
    """``log2`` of the trace norm of the partial transpose over the second qubit."""
    lam = eigvals_hermitian(partial_transpose(rho, 1))
    value = math.log2(float(np.sum(np.abs(lam))))
    return 0.0 if abs(value) < NEGATIVITY_CLAMP else value


def discord(rho, side="B"):
    """Full correlation report; discord is asymmetric, ``side`` is the measured qubit."""
    rho = as_density(rho)
    mi = mutual_information(rho)
    cc, argmax, evals = _maximize_measurement(rho, side)
    d = mi - cc
    if -DISCORD_CLAMP < d < 0.0:
        d = 0.0
        cc = mi
    return CorrelationReport(
        mutual_information=mi,
        classical_correlation=cc,
        discord=d,
        negativity=negativity(rho),
        optimizer_evals=evals,
        optimizer_argmax=argmax,
        measured_side=side,
    )
