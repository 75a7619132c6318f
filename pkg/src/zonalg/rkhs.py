"""Reproducing-kernel structure on [0, pi].

Evaluation of a lifted vector at phi is the support-function difference at
the normal direction, E_phi(x) = h_plus(phi + pi/2) - h_minus(phi + pi/2);
with the normalized inner product this equals <x, k_phi> for the kernel
vector k_phi = [2B, (pi/2) I^phi], giving the kernel
K(phi, psi) = 2 - (pi/2) sin|phi - psi|.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass

import numpy as np

from . import bodies, lifted
from .bodies import PI, Body, segment, support_many
from .errors import DomainError, InvalidInputError, NumericError
from .lifted import LiftedVector, lift

JACOBI_EPS = 1e-12


def _check_domain(phi: float) -> None:
    if not (0.0 <= phi <= PI):
        raise DomainError(f"angle {phi} outside [0, pi]; reduce mod pi first")


def kernel(phi: float, psi: float) -> float:
    """K(phi, psi) = 2 - (pi/2) sin|phi - psi|."""
    _check_domain(phi)
    _check_domain(psi)
    return 2.0 - (PI / 2.0) * math.sin(abs(phi - psi))


def kernel_vector(phi: float) -> LiftedVector:
    """The lifted vector [2B, (pi/2) I^phi] representing evaluation at phi."""
    _check_domain(phi)
    return lift(bodies.disc(2.0), segment(phi, PI / 2.0))


def evaluate(x: LiftedVector, phi: float) -> float:
    """Support difference at the normal of phi; equals inner(x, kernel_vector(phi))."""
    _check_domain(phi)
    theta = phi + PI / 2.0
    return bodies.support(x.plus, theta) - bodies.support(x.minus, theta)


def evaluate_many(x: LiftedVector, phis: np.ndarray) -> np.ndarray:
    thetas = np.asarray(phis, dtype=float) + PI / 2.0
    return support_many(x.plus, thetas) - support_many(x.minus, thetas)


@dataclass(frozen=True)
class WidthFunction:
    nodes: tuple[float, ...]
    values: tuple[float, ...]

    def to_dict(self) -> dict:
        return {"nodes": list(self.nodes), "values": list(self.values)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(",".join(repr(n) for n in self.nodes) + "\n")
        buf.write(",".join(repr(v) for v in self.values) + "\n")
        return buf.getvalue()


def width_function_from_dict(obj: dict) -> WidthFunction:
    try:
        nodes = tuple(float(n) for n in obj["nodes"])
        values = tuple(float(v) for v in obj["values"])
    except KeyError as exc:
        raise InvalidInputError(f"width function JSON missing field {exc}") from exc
    if len(nodes) != len(values):
        raise InvalidInputError("nodes and values must have equal length")
    return WidthFunction(nodes, values)


def sample(x: LiftedVector, n: int) -> WidthFunction:
    """Evaluate x on the uniform n-point grid over [0, pi]."""
    if n < 2:
        raise InvalidInputError(f"need n >= 2 grid points, got {n}")
    nodes = np.linspace(0.0, PI, n)
    values = evaluate_many(x, nodes)
    return WidthFunction(tuple(map(float, nodes)), tuple(map(float, values)))


@dataclass(frozen=True)
class GramMatrix:
    nodes: tuple[float, ...]
    entries: tuple[tuple[float, ...], ...]

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(",".join(repr(n) for n in self.nodes) + "\n")
        for row in self.entries:
            buf.write(",".join(repr(v) for v in row) + "\n")
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {"nodes": list(self.nodes), "entries": [list(r) for r in self.entries]}


def gram(nodes) -> GramMatrix:
    """Kernel matrix of a node set; positive semidefinite by construction."""
    arr = np.asarray(list(nodes), dtype=float)
    for n in arr:
        _check_domain(float(n))
    if len(arr) >= 2:
        srt = np.sort(arr)
        if np.min(np.diff(srt)) <= 1e-12:
            raise InvalidInputError("gram nodes must be distinct (separation > 1e-12)")
    mat = 2.0 - (PI / 2.0) * np.sin(np.abs(arr[:, None] - arr[None, :]))
    return GramMatrix(tuple(map(float, arr)), tuple(tuple(map(float, row)) for row in mat))


def jacobi_eigenvalues(matrix: np.ndarray, eps: float = JACOBI_EPS, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations."""
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T, rtol=0.0, atol=1e-12 * (1.0 + np.abs(a).max())):
        raise InvalidInputError("jacobi_eigenvalues needs a symmetric square matrix")
    if n == 1:
        return a.diagonal().copy()
    fro = math.sqrt(float(np.sum(a * a))) or 1.0
    for _ in range(max_sweeps):
        off = math.sqrt(max(float(np.sum(a * a) - np.sum(a.diagonal() ** 2)), 0.0))
        if off <= eps * fro:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                phi = 0.5 * math.atan2(2.0 * apq, a[q, q] - a[p, p])
                c, s = math.cos(phi), math.sin(phi)
                rot_p = c * a[p, :] - s * a[q, :]
                rot_q = s * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = rot_p, rot_q
                col_p = c * a[:, p] - s * a[:, q]
                col_q = s * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = col_p, col_q
    return np.sort(a.diagonal())


def psd_min_eig(g: GramMatrix | np.ndarray) -> float:
    """Smallest eigenvalue via cyclic Jacobi."""
    mat = g.array if isinstance(g, GramMatrix) else np.asarray(g, dtype=float)
    return float(jacobi_eigenvalues(mat)[0])


def interpolate(nodes, values, ridge: float = 0.0) -> np.ndarray:
    """Coefficients a solving (G + ridge*I) a = values; the fitted function
    is phi -> sum_i a_i * kernel(nodes_i, phi)."""
    if ridge < 0:
        raise InvalidInputError(f"ridge must be >= 0, got {ridge}")
    g = gram(nodes).array
    vals = np.asarray(list(values), dtype=float)
    if len(vals) != g.shape[0]:
        raise InvalidInputError("nodes and values must have equal length")
    system = g + ridge * np.eye(g.shape[0])
    try:
        chol = np.linalg.cholesky(system)
    except np.linalg.LinAlgError as exc:
        raise NumericError("kernel system is singular; retry with ridge > 0") from exc
    y = np.linalg.solve(chol, vals)
    return np.linalg.solve(chol.T, y)


def interpolant(nodes, coeffs):
    """The fitted function phi -> sum_i a_i K(nodes_i, phi)."""
    arr = np.asarray(list(nodes), dtype=float)
    a = np.asarray(coeffs, dtype=float)

    def fitted(phi: float) -> float:
        return float(np.sum(a * (2.0 - (PI / 2.0) * np.sin(np.abs(arr - phi)))))

    return fitted
