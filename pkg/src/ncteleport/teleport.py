"""Teleportation of one qubit through a two-qubit channel.

Qubit order in the protocol register is (psi, channel-A, channel-B): Alice
holds the first two, the receiver holds the last. All four Bell-measurement
outcomes are enumerated; nothing is sampled.
"""

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .linalg import DensityMatrix, as_density, dagger, kron, partial_trace
from .rindler import alice_rob_state, check_r, mode_isometry
from .states import CNOT, H, I2, X, Z, basis_ket, check_p

PROB_TOL = 1e-12
MIN_BRANCH_PROB = 1e-14

_ALICE_GATES = kron(H, kron(I2, I2)) @ kron(CNOT, I2)


@dataclass(frozen=True)
class TeleportOutcome:
    """One branch ``|ij>`` of Alice's measurement.

    ``degenerate`` flags a branch whose probability fell below
    ``MIN_BRANCH_PROB``; its states are ``None`` and its fidelity is nan.
    """

    i: int
    j: int
    probability: float
    conditional_state: DensityMatrix | None
    corrected_state: DensityMatrix | None
    fidelity: float
    degenerate: bool = False


@dataclass(frozen=True)
class TeleportReport:
    outcomes: tuple
    min_fidelity: float
    avg_fidelity: float

    def outcome(self, i, j):
        return self.outcomes[2 * i + j]

    @property
    def fidelity_i0(self):
        return self.outcome(0, 0).fidelity

    @property
    def fidelity_i1(self):
        return self.outcome(0, 1).fidelity


def correction(i, j):
    """Receiver's unitary ``Z^i X^j`` for outcome ``|ij>``."""
    return np.linalg.matrix_power(Z, i) @ np.linalg.matrix_power(X, j)


def _fidelity(psi, rho):
    k = psi.ket
    return float(np.real(k.conj() @ rho @ k))


def run_protocol(psi, channel):
    """Teleport ``psi`` through ``channel`` and report every measurement branch."""
    channel = as_density(channel)
    if channel.qubit_count != 2:
        raise ValueError(f"channel must be a 2-qubit state, got {channel.qubit_count} qubits")

    state = kron(psi.density().matrix, channel.matrix)
    state = _ALICE_GATES @ state @ dagger(_ALICE_GATES)

    outcomes = []
    for i, j in product((0, 1), repeat=2):
        ket = basis_ket(f"{i}{j}")
        proj = kron(np.outer(ket, ket.conj()), I2)
        branch = proj @ state @ proj
        prob = float(np.trace(branch).real)
        if prob < MIN_BRANCH_PROB:
            outcomes.append(TeleportOutcome(i, j, prob, None, None, math.nan, degenerate=True))
            continue
        rob = DensityMatrix(branch / prob)
        rob = partial_trace(partial_trace(rob, 0), 0)
        u = correction(i, j)
        fixed = DensityMatrix(u @ rob.matrix @ dagger(u))
        outcomes.append(TeleportOutcome(i, j, prob, rob, fixed, _fidelity(psi, fixed.matrix)))

    live = [o for o in outcomes if not o.degenerate]
    total = sum(o.probability for o in outcomes)
    if abs(total - 1.0) > PROB_TOL:
        raise RuntimeError(f"branch probabilities sum to {total!r}")
    return TeleportReport(
        outcomes=tuple(outcomes),
        min_fidelity=min(o.fidelity for o in live),
        avg_fidelity=sum(o.probability * o.fidelity for o in live) / total,
    )


def noninertial_report(psi, p, r):
    return run_protocol(psi, alice_rob_state(p, r))


def fidelity_closed_form(psi, p, r):
    """Closed-form ``(F_i0, F_i1)`` for the Werner channel with an accelerated receiver."""
    p, r = check_p(p), check_r(r)
    a2, b2 = psi.alpha2, psi.beta2
    c, s = math.cos(r), math.sin(r)
    f_i0 = 0.5 * (
        b2**2 * (2 - (1 - p) * c * c)
        + a2**2 * (1 + p) * c * c
        + 2 * a2 * b2 * (p * c * (2 - c) + 1)
    )
    f_i1 = f_i0 + (a2 - b2) * s * s
    return f_i0, f_i1


def min_fidelity(psi, p, r):
    """Smallest branch fidelity of the simulated protocol."""
    return noninertial_report(psi, p, r).min_fidelity


def observe_post_teleport(psi, i, j, r):
    """Receiver re-expresses an already teleported ``X^j Z^i |psi>`` in the accelerated frame.

    Returns the corrected region-I state and its fidelity with ``psi``.
    """
    if i not in (0, 1) or j not in (0, 1):
        raise ValueError(f"outcome bits must be 0 or 1, got ({i}, {j})")
    phi = np.linalg.matrix_power(X, j) @ np.linalg.matrix_power(Z, i) @ psi.ket
    modes = DensityMatrix.from_ket(mode_isometry(r) @ phi)
    rob = partial_trace(modes, 1)
    u = correction(i, j)
    fixed = DensityMatrix(u @ rob.matrix @ dagger(u))
    return fixed, _fidelity(psi, fixed.matrix)
