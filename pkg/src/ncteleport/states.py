"""Pure qubits, the Bell state, Werner channels and the single-qubit gates."""

import math
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

from .linalg import DensityMatrix

NORM_TOL = 1e-12


@dataclass(frozen=True)
class PureQubit:
    """Normalized amplitudes of ``alpha|0> + beta|1>``. Global phase is kept as given."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"|alpha|^2 + |beta|^2 = {norm!r}, expected 1")

    @property
    def alpha2(self):
        return abs(self.alpha) ** 2

    @property
    def beta2(self):
        return abs(self.beta) ** 2

    @property
    def ket(self):
        return np.array([self.alpha, self.beta], dtype=np.complex128)

    def density(self):
        return DensityMatrix.from_ket(self.ket)


def pure_qubit(alpha, beta):
    """Build a PureQubit, renormalizing the amplitudes."""
    alpha, beta = complex(alpha), complex(beta)
    norm = math.sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
    if norm == 0.0:
        raise ValueError("pure_qubit needs a nonzero amplitude vector")
    return PureQubit(alpha / norm, beta / norm)


def qubit_from_population(alpha2, phase=0.0):
    """``sqrt(alpha2)|0> + e^{i phase} sqrt(1 - alpha2)|1>``."""
    if not 0.0 <= alpha2 <= 1.0:
        raise ValueError(f"alpha2 must lie in [0, 1], got {alpha2!r}")
    return pure_qubit(math.sqrt(alpha2), complex(math.sqrt(1.0 - alpha2)) * np.exp(1j * phase))


_PHI_PLUS = np.array([1.0, 0.0, 0.0, 1.0], dtype=np.complex128) / math.sqrt(2.0)


def bell_phi_plus():
    return DensityMatrix.from_ket(_PHI_PLUS)


def check_p(p):
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Werner weight p must lie in [0, 1], got {p!r}")
    return p


def werner(p):
    """``(1 - p)/4 I + p |Phi+><Phi+|``; entangled exactly when p > 1/3."""
    p = check_p(p)
    m = (1.0 - p) / 4.0 * np.eye(4, dtype=np.complex128) + p * np.outer(_PHI_PLUS, _PHI_PLUS)
    return DensityMatrix(m)


def _gate(rows):
    g = np.array(rows, dtype=np.complex128)
    g.setflags(write=False)
    return g


X = _gate([[0, 1], [1, 0]])
Z = _gate([[1, 0], [0, -1]])
H = _gate(np.array([[1, 1], [1, -1]]) / math.sqrt(2.0))
I2 = _gate(np.eye(2))
# control on qubit 0, target on qubit 1
CNOT = _gate([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])

_GATES = MappingProxyType({"X": X, "Z": Z, "H": H, "CNOT": CNOT})


def gates():
    """Read-only mapping of the gates used by the protocol: X, Z, H, CNOT."""
    return _GATES


def basis_ket(bits):
    """Computational basis ket for a bit string such as ``"01"``."""
    v = np.zeros(2 ** len(bits), dtype=np.complex128)
    v[int(bits, 2)] = 1.0
    return v
