# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: double-double 1F1 series, monic recurrence, Stieltjes.

Interface identical to ``_pykernels``.  Build with ``-ffp-contract=off`` so
the error-free transformations are not fused into FMAs.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, sqrt, hypot

cnp.import_array()

cdef double SPLITTER = 134217729.0
cdef double DD_EPS = 4.930380657631324e-32  # 2**-104


cdef inline void two_sum(double a, double b, double* s, double* e) noexcept nogil:
    cdef double ss = a + b
    cdef double bb = ss - a
    s[0] = ss
    e[0] = (a - (ss - bb)) + (b - bb)


cdef inline void quick_two_sum(double a, double b, double* s, double* e) noexcept nogil:
    cdef double ss = a + b
    s[0] = ss
    e[0] = b - (ss - a)


cdef inline void two_prod(double a, double b, double* p, double* e) noexcept nogil:
    cdef double pp = a * b
    cdef double t = SPLITTER * a
    cdef double ah = t - (t - a)
    cdef double al = a - ah
    t = SPLITTER * b
    cdef double bh = t - (t - b)
    cdef double bl = b - bh
    p[0] = pp
    e[0] = ((ah * bh - pp) + ah * bl + al * bh) + al * bl


cdef inline void dd_add(double ah, double al, double bh, double bl,
                        double* rh, double* rl) noexcept nogil:
    cdef double s, e, t, f
    two_sum(ah, bh, &s, &e)
    two_sum(al, bl, &t, &f)
    e += t
    quick_two_sum(s, e, &s, &e)
    e += f
    quick_two_sum(s, e, rh, rl)


cdef inline void dd_mul(double ah, double al, double bh, double bl,
                        double* rh, double* rl) noexcept nogil:
    cdef double p, e
    two_prod(ah, bh, &p, &e)
    e += ah * bl + al * bh
    quick_two_sum(p, e, rh, rl)


cdef inline void dd_mul_d(double ah, double al, double b,
                          double* rh, double* rl) noexcept nogil:
    cdef double p, e
    two_prod(ah, b, &p, &e)
    e += al * b
    quick_two_sum(p, e, rh, rl)


cdef inline void dd_div_d(double ah, double al, double b,
                          double* rh, double* rl) noexcept nogil:
    cdef double q1 = ah / b
    cdef double p, e, s, f, q2
    two_prod(q1, b, &p, &e)
    two_sum(ah, -p, &s, &f)
    f -= e
    f += al
    q2 = (s + f) / b
    quick_two_sum(q1, q2, rh, rl)


cdef int _series_one(double ar, double ai, int b, double zr, double zi,
                     int max_terms, double* out_r, double* out_i) noexcept nogil:
    cdef double trh = 1.0, trl = 0.0, tih = 0.0, til = 0.0
    cdef double srh = 1.0, srl = 0.0, sih = 0.0, sil = 0.0
    cdef double akh, akl, rrh, rrl, iih, iil, rih, ril, irh, irl
    cdef double nrh, nrl, nih, nil, den, tmag, smag, ratio
    cdef double absz = hypot(zr, zi)
    cdef int k = 0
    while k < max_terms:
        two_sum(ar, <double>k, &akh, &akl)
        dd_mul(trh, trl, akh, akl, &rrh, &rrl)
        dd_mul_d(tih, til, ai, &iih, &iil)
        dd_mul_d(trh, trl, ai, &rih, &ril)
        dd_mul(tih, til, akh, akl, &irh, &irl)
        dd_add(rrh, rrl, -iih, -iil, &nrh, &nrl)
        dd_add(rih, ril, irh, irl, &nih, &nil)

        dd_mul_d(nrh, nrl, zr, &rrh, &rrl)
        dd_mul_d(nih, nil, zi, &iih, &iil)
        dd_mul_d(nrh, nrl, zi, &rih, &ril)
        dd_mul_d(nih, nil, zr, &irh, &irl)
        dd_add(rrh, rrl, -iih, -iil, &trh, &trl)
        dd_add(rih, ril, irh, irl, &tih, &til)

        den = <double>((k + 1) * (b + k))
        dd_div_d(trh, trl, den, &trh, &trl)
        dd_div_d(tih, til, den, &tih, &til)
        dd_add(srh, srl, trh, trl, &srh, &srl)
        dd_add(sih, sil, tih, til, &sih, &sil)
        k += 1

        tmag = fabs(trh) + fabs(tih)
        if tmag == 0.0:
            break
        smag = fabs(srh) + fabs(sih)
        ratio = hypot(ar + k, ai) * absz / ((k + 1.0) * (b + k))
        if ratio < 0.5 and tmag <= DD_EPS * 1e-2 * smag:
            break
    out_r[0] = srh + srl
    out_i[0] = sih + sil
    return k


def hyp1f1_series(a, int b, z, int max_terms=20000):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] zz = np.ascontiguousarray(
        np.atleast_1d(np.asarray(z, dtype=np.complex128)).ravel())
    cdef Py_ssize_t m = zz.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(m, dtype=np.complex128)
    cdef double ar = complex(a).real
    cdef double ai = complex(a).imag
    cdef double vr, vi
    cdef int kk, kmax = 0
    cdef Py_ssize_t j
    with nogil:
        for j in range(m):
            kk = _series_one(ar, ai, b, zz[j].real, zz[j].imag, max_terms, &vr, &vi)
            out[j].real = vr
            out[j].imag = vi
            if kk > kmax:
                kmax = kk
    shape = np.shape(np.atleast_1d(np.asarray(z)))
    return out.reshape(shape), kmax


def recurrence_eval(b, a_sq, int n, z):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] bb = np.ascontiguousarray(b, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] aa = np.ascontiguousarray(a_sq, dtype=np.float64)
    zarr = np.atleast_1d(np.asarray(z))
    shape = zarr.shape
    if n > bb.shape[0] or (n > 1 and n - 1 > aa.shape[0]):
        raise IndexError("degree exceeds recurrence table")
    if not np.iscomplexobj(zarr):
        return _recurrence_eval_real(bb, aa, n, zarr, shape)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] zz = np.ascontiguousarray(
        zarr.ravel(), dtype=np.complex128)
    cdef Py_ssize_t m = zz.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] pn = np.empty(m, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] pm = np.empty(m, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] dn = np.empty(m, dtype=np.complex128)
    cdef double complex p, p_prev, p_next, d, d_prev, d_next, zj
    cdef double ak2
    cdef Py_ssize_t j
    cdef int k
    with nogil:
        for j in range(m):
            zj = zz[j]
            p_prev = 0
            p = 1
            d_prev = 0
            d = 0
            for k in range(n):
                ak2 = aa[k - 1] if k > 0 else 0.0
                p_next = (zj - bb[k]) * p - ak2 * p_prev
                d_next = p + (zj - bb[k]) * d - ak2 * d_prev
                p_prev = p
                p = p_next
                d_prev = d
                d = d_next
            pn[j] = p
            pm[j] = p_prev
            dn[j] = d
    return pn.reshape(shape), pm.reshape(shape), dn.reshape(shape)


cdef _recurrence_eval_real(cnp.ndarray[cnp.float64_t, ndim=1] bb,
                           cnp.ndarray[cnp.float64_t, ndim=1] aa, int n, zarr, shape):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xx = np.ascontiguousarray(zarr.ravel(), dtype=np.float64)
    cdef Py_ssize_t m = xx.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] pn = np.empty(m)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] pm = np.empty(m)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] dn = np.empty(m)
    cdef double p, p_prev, p_next, d, d_prev, d_next, xj, ak2
    cdef Py_ssize_t j
    cdef int k
    with nogil:
        for j in range(m):
            xj = xx[j]
            p_prev = 0.0
            p = 1.0
            d_prev = 0.0
            d = 0.0
            for k in range(n):
                ak2 = aa[k - 1] if k > 0 else 0.0
                p_next = (xj - bb[k]) * p - ak2 * p_prev
                d_next = p + (xj - bb[k]) * d - ak2 * d_prev
                p_prev = p
                p = p_next
                d_prev = d
                d = d_next
            pn[j] = p
            pm[j] = p_prev
            dn[j] = d
    return pn.reshape(shape), pm.reshape(shape), dn.reshape(shape)


def stieltjes(x, w, int n_max):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xx = np.ascontiguousarray(x, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ww = np.ascontiguousarray(w, dtype=np.float64)
    cdef Py_ssize_t m = xx.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] q = np.empty(m)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] q_prev = np.zeros(m)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] r = np.empty(m)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] b = np.empty(n_max)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] a_sq = np.empty(n_max)
    cdef double mu0 = 0.0, bk, a_prev = 0.0, a2, proj, inv
    cdef Py_ssize_t j
    cdef int k
    with nogil:
        for j in range(m):
            mu0 += ww[j]
        inv = 1.0 / sqrt(mu0)
        for j in range(m):
            q[j] = inv
        for k in range(n_max):
            bk = 0.0
            for j in range(m):
                bk += ww[j] * xx[j] * q[j] * q[j]
            b[k] = bk
            proj = 0.0
            for j in range(m):
                r[j] = (xx[j] - bk) * q[j] - a_prev * q_prev[j]
                proj += ww[j] * q[j] * r[j]
            a2 = 0.0
            for j in range(m):
                r[j] -= proj * q[j]
                a2 += ww[j] * r[j] * r[j]
            a_sq[k] = a2
            a_prev = sqrt(a2)
            inv = 1.0 / a_prev
            for j in range(m):
                q_prev[j] = q[j]
                q[j] = r[j] * inv
    return b, a_sq
