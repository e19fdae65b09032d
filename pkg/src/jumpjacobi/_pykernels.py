"""Pure numpy implementation of the numerical kernels.

This module mirrors ``_ckernels.pyx`` function for function.  It is used when
the compiled extension is unavailable or when ``JUMPJACOBI_PURE_PYTHON=1``.
All routines are vectorized over evaluation points; the loops that remain
run over series terms or polynomial degree.

The confluent hypergeometric series is summed in double-double arithmetic
(error-free transformations), which keeps ~32 significant digits through
the cancellation that purely imaginary arguments cause.
"""

import numpy as np

_SPLITTER = 134217729.0  # 2**27 + 1
_DD_EPS = 2.0**-104


def _two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _quick_two_sum(a, b):
    s = a + b
    err = b - (s - a)
    return s, err


def _split(a):
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def _two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def _dd_add(ah, al, bh, bl):
    s, e = _two_sum(ah, bh)
    t, f = _two_sum(al, bl)
    e = e + t
    s, e = _quick_two_sum(s, e)
    e = e + f
    return _quick_two_sum(s, e)


def _dd_mul(ah, al, bh, bl):
    p, e = _two_prod(ah, bh)
    e = e + (ah * bl + al * bh)
    return _quick_two_sum(p, e)


def _dd_mul_d(ah, al, b):
    p, e = _two_prod(ah, b)
    e = e + al * b
    return _quick_two_sum(p, e)


def _dd_div_d(ah, al, b):
    q1 = ah / b
    p, e = _two_prod(q1, b)
    s, f = _two_sum(ah, -p)
    f = f - e
    f = f + al
    q2 = (s + f) / b
    return _quick_two_sum(q1, q2)


def hyp1f1_series(a, b, z, max_terms=20000):
    """Taylor series of 1F1(a; b; z) for integer ``b >= 1``.

    Parameters
    ----------
    a : complex
    b : int
    z : array_like of complex

    Returns
    -------
    values : ndarray of complex
    nterms : int
        Number of terms consumed by the slowest point.
    """
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    zr = z.real.copy()
    zi = z.imag.copy()
    shape = zr.shape
    ar = float(np.real(a))
    ai = float(np.imag(a))

    # running term t_k and partial sum s, each complex double-double
    trh = np.ones(shape)
    trl = np.zeros(shape)
    tih = np.zeros(shape)
    til = np.zeros(shape)
    srh = np.ones(shape)
    srl = np.zeros(shape)
    sih = np.zeros(shape)
    sil = np.zeros(shape)
    absz = np.abs(z)
    active = np.ones(shape, dtype=bool)
    k = 0
    while k < max_terms:
        # t <- t * (a + k)
        akh, akl = _two_sum(ar, float(k))
        rr_h, rr_l = _dd_mul(trh, trl, akh, akl)
        ii_h, ii_l = _dd_mul_d(tih, til, ai)
        ri_h, ri_l = _dd_mul_d(trh, trl, ai)
        ir_h, ir_l = _dd_mul(tih, til, akh, akl)
        nrh, nrl = _dd_add(rr_h, rr_l, -ii_h, -ii_l)
        nih, nil = _dd_add(ri_h, ri_l, ir_h, ir_l)
        # t <- t * z
        rr_h, rr_l = _dd_mul_d(nrh, nrl, zr)
        ii_h, ii_l = _dd_mul_d(nih, nil, zi)
        ri_h, ri_l = _dd_mul_d(nrh, nrl, zi)
        ir_h, ir_l = _dd_mul_d(nih, nil, zr)
        trh, trl = _dd_add(rr_h, rr_l, -ii_h, -ii_l)
        tih, til = _dd_add(ri_h, ri_l, ir_h, ir_l)
        # t <- t / ((k + 1) (b + k))
        den = float((k + 1) * (b + k))
        trh, trl = _dd_div_d(trh, trl, den)
        tih, til = _dd_div_d(tih, til, den)
        srh, srl = _dd_add(srh, srl, trh, trl)
        sih, sil = _dd_add(sih, sil, tih, til)
        k += 1

        tmag = np.abs(trh) + np.abs(tih)
        smag = np.abs(srh) + np.abs(sih)
        ratio = abs(complex(ar + k, ai)) * absz / ((k + 1) * (b + k))
        done = (tmag == 0.0) | ((ratio < 0.5) & (tmag <= _DD_EPS * 1e-2 * smag))
        active &= ~done
        if not active.any():
            break
    return srh + srl + 1j * (sih + sil), k


def recurrence_eval(b, a_sq, n, z):
    """Monic three-term recurrence at points ``z``.

    Returns ``(P_n(z), P_{n-1}(z), P_n'(z))``.  ``P_{-1}`` is taken as 0.
    """
    z = np.atleast_1d(np.asarray(z))
    dtype = np.result_type(z.dtype, np.float64)
    p_prev = np.zeros(z.shape, dtype=dtype)
    p = np.ones(z.shape, dtype=dtype)
    d_prev = np.zeros(z.shape, dtype=dtype)
    d = np.zeros(z.shape, dtype=dtype)
    for k in range(n):
        ak2 = a_sq[k - 1] if k > 0 else 0.0
        p_next = (z - b[k]) * p - ak2 * p_prev
        d_next = p + (z - b[k]) * d - ak2 * d_prev
        p_prev, p = p, p_next
        d_prev, d = d, d_next
    return p, p_prev, d


def stieltjes(x, w, n_max):
    """Discretized Stieltjes procedure in orthonormal form.

    Parameters
    ----------
    x, w : ndarray
        Nodes and positive weights of a discrete measure.
    n_max : int

    Returns
    -------
    b : ndarray, shape (n_max,)
        b_0 .. b_{n_max-1}
    a_sq : ndarray, shape (n_max,)
        a_1^2 .. a_{n_max}^2
    """
    x = np.asarray(x, dtype=float)
    w = np.asarray(w, dtype=float)
    mu0 = w.sum()
    b = np.empty(n_max)
    a_sq = np.empty(n_max)
    q_prev = np.zeros_like(x)
    q = np.full_like(x, 1.0 / np.sqrt(mu0))
    a_prev = 0.0
    for k in range(n_max):
        wq = w * q
        b[k] = np.dot(wq, x * q)
        r = (x - b[k]) * q - a_prev * q_prev
        # one reorthogonalization pass against the two previous vectors
        r -= np.dot(wq, r) * q
        a2 = np.dot(w * r, r)
        a_sq[k] = a2
        a_prev = np.sqrt(a2)
        q_prev, q = q, r / a_prev
    return b, a_sq
