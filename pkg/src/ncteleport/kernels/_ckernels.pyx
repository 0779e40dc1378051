# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels. Same contracts as ``_python``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, atan2, cos, sin, log2

cdef extern from "complex.h" nogil:
    double creal(double complex)
    double cimag(double complex)
    double cabs(double complex)
    double complex conj(double complex)
    double complex cexp(double complex)

cnp.import_array()

cdef int MAX_SWEEPS = 50
cdef double TINY_BRANCH = 1e-14


cdef void _rotate(double complex[:, ::1] a, double complex[:, ::1] v,
                  Py_ssize_t n, Py_ssize_t p, Py_ssize_t q) noexcept nogil:
    cdef double mag = cabs(a[p, q])
    if mag <= 1e-300:
        return
    cdef double complex ph = a[p, q] / mag
    cdef double complex phc = conj(ph)
    cdef double theta = 0.5 * atan2(2.0 * mag, creal(a[p, p]) - creal(a[q, q]))
    cdef double c = cos(theta)
    cdef double s = sin(theta)
    cdef Py_ssize_t k
    cdef double complex xp, xq
    for k in range(n):
        xp = a[k, p]
        xq = a[k, q] * phc
        a[k, p] = c * xp + s * xq
        a[k, q] = -s * xp + c * xq
    for k in range(n):
        xp = a[p, k]
        xq = a[q, k] * ph
        a[p, k] = c * xp + s * xq
        a[q, k] = -s * xp + c * xq
    a[p, q] = 0.0
    a[q, p] = 0.0
    for k in range(n):
        xp = v[k, p]
        xq = v[k, q] * phc
        v[k, p] = c * xp + s * xq
        v[k, q] = -s * xp + c * xq


def jacobi_eigh(a_in, double tol=1e-15):
    cdef double complex[:, ::1] a = np.array(a_in, dtype=np.complex128, order="C")
    cdef Py_ssize_t n = a.shape[0]
    vv = np.eye(n, dtype=np.complex128)
    cdef double complex[:, ::1] v = vv
    cdef Py_ssize_t i, j, p, q
    cdef int sweep
    cdef double off, scale = 0.0, x
    with nogil:
        for i in range(n):
            for j in range(n):
                x = cabs(a[i, j])
                if x > scale:
                    scale = x
        if scale < 1e-300:
            scale = 1e-300
        for sweep in range(MAX_SWEEPS):
            off = 0.0
            for i in range(n):
                for j in range(n):
                    if i != j:
                        x = cabs(a[i, j])
                        off += x * x
            if sqrt(off) <= tol * scale:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    _rotate(a, v, n, p, q)
    w = np.array([creal(a[i, i]) for i in range(n)])
    order = np.argsort(w, kind="stable")
    return w[order], vv[:, order]


cdef inline double _entropy2(double x, double y, double complex z) noexcept nogil:
    cdef double half = 0.5 * (x + y)
    cdef double d = 0.5 * (x - y)
    cdef double rad = sqrt(d * d + creal(z) * creal(z) + cimag(z) * cimag(z))
    cdef double lam, out = 0.0
    lam = half + rad
    if lam > 0.0:
        out -= lam * log2(lam)
    lam = half - rad
    if lam > 0.0:
        out -= lam * log2(lam)
    return out


def conditional_entropy_grid(rho_in, thetas_in, phis_in):
    cdef const double complex[:, ::1] rho = np.ascontiguousarray(rho_in, dtype=np.complex128)
    cdef const double[::1] thetas = np.ascontiguousarray(thetas_in, dtype=np.float64).ravel()
    cdef const double[::1] phis = np.ascontiguousarray(phis_in, dtype=np.float64).ravel()
    cdef Py_ssize_t nt = thetas.shape[0], nf = phis.shape[0]
    result = np.zeros((nt, nf), dtype=np.float64)
    cdef double[:, ::1] out = result
    cdef Py_ssize_t it, jf, a, c, b, d
    cdef double complex m[2]
    cdef double complex mc[2]
    cdef double complex blk[2][2]
    cdef double complex ra[2][2]
    cdef double q, total
    cdef double complex acc

    # rho_A = Tr_B rho
    for a in range(2):
        for c in range(2):
            ra[a][c] = rho[2 * a, 2 * c] + rho[2 * a + 1, 2 * c + 1]

    with nogil:
        for it in range(nt):
            for jf in range(nf):
                m[0] = cos(0.5 * thetas[it])
                m[1] = cexp(1j * phis[jf]) * sin(0.5 * thetas[it])
                mc[0] = conj(m[0])
                mc[1] = conj(m[1])
                for a in range(2):
                    for c in range(2):
                        acc = 0.0
                        for b in range(2):
                            for d in range(2):
                                acc = acc + mc[b] * rho[2 * a + b, 2 * c + d] * m[d]
                        blk[a][c] = acc
                total = 0.0
                q = creal(blk[0][0]) + creal(blk[1][1])
                if q >= TINY_BRANCH:
                    total += q * _entropy2(creal(blk[0][0]) / q, creal(blk[1][1]) / q,
                                           blk[0][1] / q)
                for a in range(2):
                    for c in range(2):
                        blk[a][c] = ra[a][c] - blk[a][c]
                q = creal(blk[0][0]) + creal(blk[1][1])
                if q >= TINY_BRANCH:
                    total += q * _entropy2(creal(blk[0][0]) / q, creal(blk[1][1]) / q,
                                           blk[0][1] / q)
                out[it, jf] = total
    return result
