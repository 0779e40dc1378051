"""Small dense complex linear algebra for 1-, 2- and 3-qubit states.

Qubit ordering is big-endian throughout: qubit 0 is the leftmost tensor
factor and the most significant bit of a basis index, so ``|ij>`` has index
``2*i + j``.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
EIG_HERMITIAN_TOL = 1e-10


def _frozen(m):
    m = np.array(m, dtype=np.complex128)
    m.setflags(write=False)
    return m


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated qubit density matrix.

    Construction checks Hermiticity, unit trace and positive
    semidefiniteness; the stored matrix is read-only.
    """

    matrix: np.ndarray
    qubit_count: int = 0

    def __post_init__(self):
        m = _frozen(self.matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {m.shape}")
        dim = m.shape[0]
        n = dim.bit_length() - 1
        if dim < 2 or 1 << n != dim:
            raise ValueError(f"dimension {dim} is not a power of two")
        if self.qubit_count not in (0, n):
            raise ValueError(f"qubit_count={self.qubit_count} does not match dimension {dim}")
        herm = np.abs(m - m.conj().T).max()
        if herm > HERMITIAN_TOL:
            raise ValueError(f"matrix is not Hermitian (max deviation {herm:.3e})")
        tr = np.trace(m)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace is {tr.real:.15g}, expected 1")
        lo = eigvals_hermitian(m)[0]
        if lo < -PSD_TOL:
            raise ValueError(f"matrix is not positive semidefinite (min eigenvalue {lo:.3e})")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "qubit_count", n)

    @property
    def dim(self):
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)

    @classmethod
    def from_ket(cls, ket):
        ket = np.asarray(ket, dtype=np.complex128).ravel()
        return cls(np.outer(ket, ket.conj()))


def as_density(rho):
    """Coerce an array or DensityMatrix to a DensityMatrix (validating arrays)."""
    if isinstance(rho, DensityMatrix):
        return rho
    return DensityMatrix(rho)


def dagger(m):
    return np.asarray(m).conj().T


def kron(a, b):
    """Tensor product; entry ``(i*db + k, j*db + l)`` is ``a[i, j] * b[k, l]``."""
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def partial_trace(rho, subsystem_index):
    """Trace out one qubit, returning the reduced DensityMatrix."""
    rho = as_density(rho)
    n = rho.qubit_count
    if not 0 <= subsystem_index < n:
        raise ValueError(f"subsystem_index {subsystem_index} out of range for {n} qubits")
    if n == 1:
        raise ValueError("cannot trace out the only qubit")
    left = 2**subsystem_index
    right = 2 ** (n - subsystem_index - 1)
    t = rho.matrix.reshape(left, 2, right, left, 2, right)
    reduced = np.einsum("axbcxd->abcd", t).reshape(left * right, left * right)
    return DensityMatrix(reduced)


def partial_transpose(rho, subsystem_index):
    """Transpose one factor of a two-qubit state; returns a plain matrix."""
    rho = as_density(rho)
    if rho.qubit_count != 2:
        raise ValueError(f"partial_transpose needs a 2-qubit state, got {rho.qubit_count} qubits")
    if subsystem_index not in (0, 1):
        raise ValueError(f"subsystem_index must be 0 or 1, got {subsystem_index}")
    t = rho.matrix.reshape(2, 2, 2, 2)
    if subsystem_index == 0:
        t = t.transpose(2, 1, 0, 3)
    else:
        t = t.transpose(0, 3, 2, 1)
    return t.reshape(4, 4).copy()


def _check_hermitian(m):
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    dev = np.abs(m - m.conj().T).max()
    if dev > EIG_HERMITIAN_TOL:
        raise ValueError(f"matrix is not Hermitian (max deviation {dev:.3e})")
    return m


def eigh_hermitian(m):
    """Eigenvalues (ascending) and eigenvectors (columns) of a Hermitian matrix."""
    return kernels.jacobi_eigh(_check_hermitian(m))


def eigvals_hermitian(m):
    return eigh_hermitian(m)[0]


def von_neumann_entropy(rho):
    """Entropy in bits. Eigenvalues slightly below zero are clamped."""
    rho = as_density(rho)
    lam = np.clip(eigvals_hermitian(rho.matrix), 0.0, None)
    lam = lam[lam > 0.0]
    return float(max(-np.sum(lam * np.log2(lam)), 0.0))
