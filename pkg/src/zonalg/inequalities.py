"""Inequality checkers and the singular-position reduction pipeline.

The generalized isoperimetric and Brunn-Minkowski inequalities are
theorems; the checkers exist to fuzz the implementation, and the reduction
pipeline replays the constructive proof: rotate one zonogon into singular
position, cancel the parallel pair, repeat until one side is trivial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import bodies, lifted
from .bodies import ANGLE_TOL, PI, Body, Diangle, Direction, canonicalize, support_many
from .errors import DegenerateDirectionError, DomainError, UnsupportedRepresentationError
from .lifted import LiftedVector, bilinear_M, deficit, eps_form, measure_ext, perimeter_ext

TOL_ABS = 1e-9
TOL_REL = 1e-9


def scaled_tol(lhs: float, rhs: float, tol_abs: float = TOL_ABS, tol_rel: float = TOL_REL) -> float:
    return tol_abs + tol_rel * (1.0 + abs(lhs) + abs(rhs))


@dataclass(frozen=True)
class CheckReport:
    holds: bool
    lhs: float
    rhs: float
    slack: float
    tolerance: float

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "tolerance": self.tolerance,
        }


def _report(lhs: float, rhs: float, tol_abs: float, tol_rel: float) -> CheckReport:
    tol = scaled_tol(lhs, rhs, tol_abs, tol_rel)
    slack = lhs - rhs
    return CheckReport(slack >= -tol, lhs, rhs, slack, tol)


def check_isoperimetric(x: LiftedVector, tol_abs: float = TOL_ABS, tol_rel: float = TOL_REL) -> CheckReport:
    """o(x)^2 >= 4*pi*m(x); a failure beyond tolerance signals a bug."""
    o = perimeter_ext(x)
    return _report(o * o, 4.0 * PI * measure_ext(x), tol_abs, tol_rel)


def check_bm_classical(u: Body, v: Body, tol_abs: float = TOL_ABS, tol_rel: float = TOL_REL) -> CheckReport:
    """sqrt(area(u+v)) >= sqrt(area(u)) + sqrt(area(v))."""
    lhs = math.sqrt(bodies.area(bodies.minkowski_add(u, v)))
    rhs = math.sqrt(bodies.area(u)) + math.sqrt(bodies.area(v))
    return _report(lhs, rhs, tol_abs, tol_rel)


def check_bm_generalized(
    x: LiftedVector, y: LiftedVector, tol_abs: float = TOL_ABS, tol_rel: float = TOL_REL
) -> CheckReport:
    """M(x,y)^2 >= m(x)*m(y), for vectors of positive measure."""
    mx, my = measure_ext(x), measure_ext(y)
    if mx <= 0:
        raise DomainError(f"first argument has nonpositive measure {mx}")
    if my <= 0:
        raise DomainError(f"second argument has nonpositive measure {my}")
    b = bilinear_M(x, y)
    return _report(b * b, mx * my, tol_abs, tol_rel)


def check_schwarz_deficit(
    x: LiftedVector, y: LiftedVector, tol_abs: float = TOL_ABS, tol_rel: float = TOL_REL
) -> CheckReport:
    """eps(x,y) <= sqrt(D(x))*sqrt(D(y))."""
    lhs = math.sqrt(max(deficit(x), 0.0)) * math.sqrt(max(deficit(y), 0.0))
    return _report(lhs, eps_form(x, y), tol_abs, tol_rel)


def _require_zonogon(v: Body, what: str) -> None:
    if not v.is_zonogon:
        raise UnsupportedRepresentationError(f"{what} requires a pure zonogon; polygonize the disc first")


def rotation_fn_E(u: Body, v: Body, phi: float) -> float:
    """Area of u + rotate(v, phi)."""
    _require_zonogon(v, "rotation_fn_E")
    return bodies.area(bodies.minkowski_add(u, bodies.rotate(v, phi)))


def rotation_fn_F(u: Body, v: Body, phi: float) -> float:
    """Sum over diangles of v of width(u, dir+phi) * half_length."""
    _require_zonogon(v, "rotation_fn_F")
    return float(_rotation_fn_F_many(u, v, np.array([phi]))[0])


def _rotation_fn_F_many(u: Body, v: Body, phis: np.ndarray) -> np.ndarray:
    angles = v._angles[None, :] + phis[:, None] + PI / 2
    widths = 2.0 * support_many(u, angles.ravel()).reshape(angles.shape)
    return widths @ v._lengths


def singular_candidates(u: Body, v: Body) -> np.ndarray:
    """Rotation angles aligning some diangle of v with some diangle of u."""
    diffs = np.mod(u._angles[:, None] - v._angles[None, :], PI).ravel()
    diffs[PI - diffs <= ANGLE_TOL] = 0.0
    cands = np.sort(np.unique(diffs))
    keep = [0]
    for i in range(1, len(cands)):
        if cands[i] - cands[keep[-1]] > ANGLE_TOL:
            keep.append(i)
    return cands[keep]


def singular_min(u: Body, v: Body) -> tuple[float, float]:
    """Minimize F over the finite candidate set; ties go to the smallest angle.

    F is interval-wise concave with breakpoints exactly at the singular
    candidates, so the global minimum over [0, pi) lies in the set.
    """
    _require_zonogon(u, "singular_min")
    _require_zonogon(v, "singular_min")
    if u.is_origin or v.is_origin:
        raise DomainError("singular_min needs two nonempty zonogons")
    cands = singular_candidates(u, v)
    values = _rotation_fn_F_many(u, v, cands)
    best = int(np.argmin(values))
    return float(cands[best]), float(values[best])


@dataclass(frozen=True)
class ReductionStep:
    phi_star: float
    F_min: float
    cancelled_direction: Direction
    joint_sides_after: int
    perimeter_ext: float
    measure_ext: float

    def to_dict(self) -> dict:
        return {
            "phi_star": self.phi_star,
            "F_min": self.F_min,
            "cancelled_direction": self.cancelled_direction.angle,
            "joint_sides_after": self.joint_sides_after,
            "perimeter_ext": self.perimeter_ext,
            "measure_ext": self.measure_ext,
        }


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]
    witness: Body
    witness_sign: int = field(default=1)


def _cancel_shared(u: Body, v: Body) -> tuple[Body, Body, Direction | None]:
    """Subtract the common part in every shared direction.

    Near-equal half-lengths (within 1e-12 relative) cancel completely to
    avoid residual slivers.  Returns the first fully cancelled direction.
    """
    out_u: list[Diangle] = []
    out_v: list[Diangle] = []
    cancelled: Direction | None = None
    pu, pv = list(u.diangles), list(v.diangles)
    i = j = 0
    while i < len(pu) and j < len(pv):
        du, dv = pu[i], pv[j]
        if du.dir.close_to(dv.dir, ANGLE_TOL):
            rem = du.half_length - dv.half_length
            close = abs(rem) <= 1e-12 * max(du.half_length, dv.half_length)
            if cancelled is None:
                cancelled = du.dir
            if not close and rem > 0:
                out_u.append(Diangle(du.dir, rem))
            elif not close and rem < 0:
                out_v.append(Diangle(dv.dir, -rem))
            i += 1
            j += 1
        elif du.dir.angle < dv.dir.angle:
            out_u.append(du)
            i += 1
        else:
            out_v.append(dv)
            j += 1
    out_u.extend(pu[i:])
    out_v.extend(pv[j:])
    return canonicalize(out_u), canonicalize(out_v), cancelled


def reduce_pair(u: Body, v: Body) -> ReductionTrace:
    """Reduce (u, v) to a single witness polygon.

    Each pass rotates v into the singular position minimizing F and cancels
    the shared directions; perimeter_ext is invariant and measure_ext can
    only grow.  Stops when one side has no diangles; the witness is the
    other side, with sign -1 when the surviving side is v.
    """
    _require_zonogon(u, "reduce_pair")
    _require_zonogon(v, "reduce_pair")
    steps: list[ReductionStep] = []
    while u.diangles and v.diangles:
        phi_star, f_min = singular_min(u, v)
        v = bodies.rotate(v, phi_star)
        u, v, cancelled = _cancel_shared(u, v)
        assert cancelled is not None
        steps.append(
            ReductionStep(
                phi_star=phi_star,
                F_min=f_min,
                cancelled_direction=cancelled,
                joint_sides_after=2 * (len(u.diangles) + len(v.diangles)),
                perimeter_ext=bodies.perimeter(u) - bodies.perimeter(v),
                measure_ext=measure_ext(LiftedVector(u, v)),
            )
        )
    if v.diangles:
        return ReductionTrace(tuple(steps), v, -1)
    return ReductionTrace(tuple(steps), u, 1)


def hyperbolic_witness(u: LiftedVector, v: LiftedVector) -> LiftedVector:
    """The combination u + t*v with zero perimeter; its measure is negative
    unless the combination is the zero vector."""
    ov = perimeter_ext(v)
    if abs(ov) <= 1e-14 * (1.0 + abs(perimeter_ext(u))):
        raise DegenerateDirectionError("second vector has zero perimeter")
    t = -perimeter_ext(u) / ov
    return lifted.add(u, lifted.scale_real(v, t))


def equality_case_check(x: LiftedVector, tol: float = 1e-10) -> bool:
    """Whether x attains isoperimetric equality, i.e. x is a disc multiple."""
    scale = 1.0 + abs(perimeter_ext(x))
    return deficit(x) <= tol * scale * scale


def is_disc_multiple(x: LiftedVector, tol: float = 1e-10) -> bool:
    """Structural counterpart of equality_case_check on the canonical form."""
    scale = 1.0 + abs(perimeter_ext(x))
    stray = sum(d.half_length for d in x.plus.diangles)
    stray += sum(d.half_length for d in x.minus.diangles)
    return stray <= tol * scale
