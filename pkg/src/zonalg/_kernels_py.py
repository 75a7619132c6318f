"""Pure-python (numpy) implementations of the hot inner loops.

Mirrors zonalg._kernels (the Cython extension); zonalg._backend picks
whichever is available at import time.  Keep the two in sync.
"""

import numpy as np


def pair_sin_sum(angles_a, lens_a, angles_b, lens_b):
    """Sum over all (j, k) of d_j * e_k * |sin(theta_j - phi_k)|."""
    if len(angles_a) == 0 or len(angles_b) == 0:
        return 0.0
    diff = np.subtract.outer(angles_a, angles_b)
    return float(lens_a @ np.abs(np.sin(diff)) @ lens_b)


def support_batch(angles, lens, disc, thetas):
    """Support function sum(d_j |cos(theta - theta_j)|) + r at each theta."""
    thetas = np.asarray(thetas, dtype=float)
    if len(angles) == 0:
        return np.full(thetas.shape, disc, dtype=float)
    diff = thetas[:, None] - angles[None, :]
    return np.abs(np.cos(diff)) @ lens + disc
