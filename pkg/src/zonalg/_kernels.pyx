# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops; see zonalg._kernels_py for the reference version."""

from libc.math cimport sin, cos, fabs

import numpy as np


def pair_sin_sum(double[::1] angles_a, double[::1] lens_a,
                 double[::1] angles_b, double[::1] lens_b):
    """Sum over all (j, k) of d_j * e_k * |sin(theta_j - phi_k)|."""
    cdef Py_ssize_t i, j
    cdef Py_ssize_t na = angles_a.shape[0]
    cdef Py_ssize_t nb = angles_b.shape[0]
    cdef double acc = 0.0
    cdef double row
    for i in range(na):
        row = 0.0
        for j in range(nb):
            row += lens_b[j] * fabs(sin(angles_a[i] - angles_b[j]))
        acc += lens_a[i] * row
    return acc


def support_batch(double[::1] angles, double[::1] lens, double disc, thetas):
    """Support function sum(d_j |cos(theta - theta_j)|) + r at each theta."""
    cdef double[::1] th = np.ascontiguousarray(thetas, dtype=np.float64)
    out_arr = np.empty(th.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef Py_ssize_t n = angles.shape[0]
    cdef Py_ssize_t m = th.shape[0]
    cdef double acc
    for i in range(m):
        acc = disc
        for j in range(n):
            acc += lens[j] * fabs(cos(th[i] - angles[j]))
        out[i] = acc
    return out_arr
