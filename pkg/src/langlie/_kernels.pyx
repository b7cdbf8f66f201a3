# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled path kernels (hot loops).

Operation-for-operation mirror of langlie._pure; see that module for the
algorithm notes.  Scalar math uses libm (erfc/exp), matching the fallback
bit for bit.
"""

from libc.math cimport erfc, exp

import numpy as np

PROBIT = 0
LOGISTIC = 1

cdef double _SQRT1_2 = 0.7071067811865476


cdef inline double _cdf(int family, double alpha, double beta, double x) nogil:
    cdef double t = alpha + beta * x
    if family == 0:
        return 0.5 * erfc(-t * _SQRT1_2)
    if t < -700.0:
        return 0.0
    if t > 700.0:
        return 1.0
    return 1.0 / (1.0 + exp(-t))


def langlie_path(int family, double alpha, double beta, double a, double b,
                 uniforms):
    u_arr = np.ascontiguousarray(uniforms, dtype=np.float64)
    cdef Py_ssize_t n = u_arr.shape[0]
    x_arr = np.empty(n, dtype=np.float64)
    y_arr = np.empty(n, dtype=np.int64)
    s_arr = np.empty(n, dtype=np.int64)
    tau_arr = np.empty(n, dtype=np.int64)
    if n == 0:
        return x_arr, y_arr, s_arr, tau_arr, (a + b) / 2.0

    last_arr = np.zeros(2 * n + 1, dtype=np.int64)
    cdef double[::1] u = u_arr
    cdef double[::1] x = x_arr
    cdef long long[::1] y = y_arr
    cdef long long[::1] s = s_arr
    cdef long long[::1] tau = tau_arr
    cdef long long[::1] last_seen = last_arr

    cdef double cur = (a + b) / 2.0
    cdef double f
    cdef long long run = 0, t, yi
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            x[i] = cur
            f = _cdf(family, alpha, beta, cur)
            yi = 1 if u[i] <= f else -1
            y[i] = yi
            run += yi
            s[i] = run
            t = last_seen[run + n]
            tau[i] = t
            last_seen[run + n] = i + 1
            if t > 0:
                cur = (x[t - 1] + cur) / 2.0
            elif yi > 0:
                cur = (a + cur) / 2.0
            else:
                cur = (cur + b) / 2.0
    return x_arr, y_arr, s_arr, tau_arr, cur


def rm_path(int family, double alpha, double beta, double x1, double c,
            uniforms):
    u_arr = np.ascontiguousarray(uniforms, dtype=np.float64)
    cdef Py_ssize_t n = u_arr.shape[0]
    x_arr = np.empty(n + 1, dtype=np.float64)
    y_arr = np.empty(n, dtype=np.int64)
    cdef double[::1] u = u_arr
    cdef double[::1] x = x_arr
    cdef long long[::1] y = y_arr

    cdef double cur = x1
    cdef double f
    cdef long long yi
    cdef Py_ssize_t i
    x[0] = cur
    with nogil:
        for i in range(n):
            f = _cdf(family, alpha, beta, cur)
            yi = 1 if u[i] <= f else -1
            y[i] = yi
            cur = cur - (c / (i + 1)) * yi / 2.0
            x[i + 1] = cur
    return x_arr, y_arr


def reflected_walk_path(double p, uniforms):
    u_arr = np.ascontiguousarray(uniforms, dtype=np.float64)
    cdef Py_ssize_t n = u_arr.shape[0]
    b_arr = np.empty(n, dtype=np.int64)
    if n == 0:
        return b_arr
    cdef double[::1] u = u_arr
    cdef long long[::1] bv = b_arr
    cdef long long cur = 1, z
    cdef Py_ssize_t i
    bv[0] = cur
    with nogil:
        for i in range(1, n):
            z = 1 if u[i] <= p else -1
            cur = cur + z
            if cur < 0:
                cur = -cur
            bv[i] = cur
    return b_arr


def coupled_langlie_pair(int family, double alpha, double beta, double a,
                         double b, double p, uniforms):
    u_arr = np.ascontiguousarray(uniforms, dtype=np.float64)
    cdef Py_ssize_t n = u_arr.shape[0]
    a_arr = np.empty(n, dtype=np.int64)
    bp_arr = np.empty(n, dtype=np.int64)
    x_arr = np.empty(n, dtype=np.float64)
    y_arr = np.empty(n, dtype=np.int64)
    if n == 0:
        return a_arr, bp_arr, x_arr, y_arr

    last_arr = np.zeros(2 * n + 1, dtype=np.int64)
    cdef double[::1] u = u_arr
    cdef long long[::1] ap = a_arr
    cdef long long[::1] bp = bp_arr
    cdef double[::1] x = x_arr
    cdef long long[::1] y = y_arr
    cdef long long[::1] last_seen = last_arr

    cdef double cur = (a + b) / 2.0
    cdef double f
    cdef long long run = 0, bw = 1, t, yi, z
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            x[i] = cur
            f = _cdf(family, alpha, beta, cur)
            if run < 0:
                yi = 1 if u[i] > 1.0 - f else -1
            else:
                yi = 1 if u[i] <= f else -1
            y[i] = yi
            run += yi
            ap[i] = run if run >= 0 else -run
            if i >= 1:
                z = 1 if u[i] <= p else -1
                bw = bw + z
                if bw < 0:
                    bw = -bw
            bp[i] = bw
            t = last_seen[run + n]
            last_seen[run + n] = i + 1
            if t > 0:
                cur = (x[t - 1] + cur) / 2.0
            elif yi > 0:
                cur = (a + cur) / 2.0
            else:
                cur = (cur + b) / 2.0
    return a_arr, bp_arr, x_arr, y_arr
