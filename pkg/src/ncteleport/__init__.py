"""Quantum teleportation over Werner channels with a uniformly accelerated receiver.

Submodules
----------
linalg    density matrices, partial trace/transpose, Jacobi eigensolver, entropy
states    pure qubits, Bell and Werner states, gates
rindler   fermionic Minkowski-to-Rindler mode map
teleport  protocol simulation and closed-form fidelities
measures  mutual information, classical correlation, discord, negativity
cli       ``point`` / ``sweep`` / ``selfcheck`` command line
"""

from .kernels import BACKEND
from .linalg import (
    DensityMatrix,
    eigh_hermitian,
    eigvals_hermitian,
    kron,
    partial_trace,
    partial_transpose,
    von_neumann_entropy,
)
from .measures import (
    CorrelationReport,
    MeasurementBasis,
    classical_correlation,
    discord,
    mutual_information,
    negativity,
)
from .rindler import accelerate_second_qubit, alice_rob_state, mode_isometry
from .states import PureQubit, bell_phi_plus, gates, pure_qubit, qubit_from_population, werner
from .teleport import (
    TeleportOutcome,
    TeleportReport,
    fidelity_closed_form,
    min_fidelity,
    observe_post_teleport,
    run_protocol,
)

__version__ = "0.1.0"
