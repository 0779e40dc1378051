"""Numpy implementations of the hot kernels.

Always importable; used when the compiled extension is missing and as the
reference the compiled kernels are checked against.
"""

import numpy as np

_MAX_SWEEPS = 50
_TINY_BRANCH = 1e-14


def jacobi_eigh(a, tol=1e-15):
    """Cyclic complex Jacobi diagonalization of a Hermitian matrix.

    Returns ``(w, v)`` with ``w`` ascending and ``a @ v = v @ diag(w)``.
    """
    a = np.array(a, dtype=np.complex128)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    scale = max(np.abs(a).max(), 1e-300)

    for _ in range(_MAX_SWEEPS):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= 1e-300:
                    continue
                phase = apq / mag
                theta = 0.5 * np.arctan2(2.0 * mag, a[p, p].real - a[q, q].real)
                c, s = np.cos(theta), np.sin(theta)
                # Q = D R with D = diag(.., conj(phase) at q); A <- Q^H A Q, V <- V Q
                col_p = a[:, p].copy()
                col_q = a[:, q] * phase.conjugate()
                a[:, p] = c * col_p + s * col_q
                a[:, q] = -s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :] * phase
                a[p, :] = c * row_p + s * row_q
                a[q, :] = -s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q] * phase.conjugate()
                v[:, p] = c * vp + s * vq
                v[:, q] = -s * vp + c * vq

    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def _binary_entropy_2x2(x, y, z):
    """Entropy (bits) of unit-trace 2x2 Hermitian [[x, z], [z*, y]], elementwise."""
    half = 0.5 * (x + y)
    rad = np.sqrt((0.5 * (x - y)) ** 2 + np.abs(z) ** 2)
    out = np.zeros(np.broadcast(half, rad).shape)
    for lam in (half + rad, half - rad):
        lam = np.clip(lam, 0.0, None)
        with np.errstate(divide="ignore", invalid="ignore"):
            term = np.where(lam > 0.0, -lam * np.log2(lam), 0.0)
        out += term
    return out


def conditional_entropy_grid(rho, thetas, phis):
    """Average post-measurement entropy of qubit A for projective measurements on B.

    ``rho`` is a 4x4 two-qubit density matrix (A is the first factor). For
    every pair ``(thetas[i], phis[j])`` the measurement is
    ``{|m><m|, I - |m><m|}`` with ``|m> = cos(t/2)|0> + e^{i f} sin(t/2)|1>``,
    and the returned ``out[i, j]`` is ``sum_k q_k S(rho_{A|k})``.
    """
    rho = np.asarray(rho, dtype=np.complex128).reshape(2, 2, 2, 2)
    thetas = np.asarray(thetas, dtype=np.float64)
    phis = np.asarray(phis, dtype=np.float64)
    t, f = np.meshgrid(thetas, phis, indexing="ij")
    m0 = np.cos(t / 2).astype(np.complex128)
    m1 = np.exp(1j * f) * np.sin(t / 2)
    m = np.stack([m0, m1], axis=-1)  # (..., b)

    # unnormalized A-block of the |m> branch: sum_{b,b'} m*_b rho[a b, a' b'] m_b'
    branch0 = np.einsum("...b,abcd,...d->...ac", m.conj(), rho, m)
    rho_a = np.einsum("abcb->ac", rho)
    branch1 = rho_a - branch0

    total = np.zeros(t.shape)
    for blk in (branch0, branch1):
        q = (blk[..., 0, 0] + blk[..., 1, 1]).real
        ok = q >= _TINY_BRANCH
        qs = np.where(ok, q, 1.0)
        s = _binary_entropy_2x2(
            blk[..., 0, 0].real / qs, blk[..., 1, 1].real / qs, blk[..., 0, 1] / qs
        )
        total += np.where(ok, q * s, 0.0)
    return total
