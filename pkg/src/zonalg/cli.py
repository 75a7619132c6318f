"""Command-line front end.

Exit codes: 0 success, 1 verification failure (an inequality violated
beyond tolerance), 2 usage or input error.  Output is JSON on stdout
unless --csv/--svg is given; identical arguments and seed produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import bodies, generators, inequalities, lifted, oracle, rkhs
from .bodies import PI, Body
from .errors import ZonalgError
from .lifted import LiftedVector


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, out_path: str | None) -> None:
    _emit(json.dumps(obj, sort_keys=True) + "\n", out_path)


def _read_body(path: str) -> Body:
    with open(path) as fh:
        return bodies.body_from_json(fh.read())


def _read_lifted(path: str) -> LiftedVector:
    with open(path) as fh:
        return lifted.lifted_from_json(fh.read())


# --- body ----------------------------------------------------------------


def _body_stats(a: Body) -> dict:
    return {
        "area": bodies.area(a),
        "perimeter": bodies.perimeter(a),
        "num_diangles": len(a.diangles),
        "disc": a.disc_radius,
        "support_max": bodies.hausdorff(a, bodies.ORIGIN),
    }


def body_svg(a: Body, grid: int = 256) -> str:
    """Render a body: circle for a disc, polygon for a zonogon, rounded path otherwise."""
    thetas = np.linspace(0.0, 2 * PI, grid, endpoint=False)
    radius = float(np.max(bodies.support_many(a, thetas))) or 1.0
    half = 1.05 * radius
    header = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="400" height="400" '
        f'viewBox="{-half:.6g} {-half:.6g} {2 * half:.6g} {2 * half:.6g}">\n'
        '<g transform="scale(1,-1)" fill="#9ecae1" stroke="#08519c" '
        f'stroke-width="{half / 200:.6g}">\n'
    )
    r = a.disc_radius
    if not a.diangles:
        shape = f'<circle cx="0" cy="0" r="{max(r, half / 400):.9g}"/>\n'
    else:
        verts = bodies.vertices(Body(a.diangles, 0.0))
        if r == 0.0:
            pts = " ".join(f"{p.x:.9g},{p.y:.9g}" for p in verts)
            shape = f'<polygon points="{pts}"/>\n'
        else:
            n = len(verts)
            cmds = []
            for i in range(n):
                p, q = verts[i], verts[(i + 1) % n]
                ex, ey = q.x - p.x, q.y - p.y
                norm = math.hypot(ex, ey)
                nx, ny = ey / norm, -ex / norm
                if i == 0:
                    cmds.append(f"M {p.x + r * nx:.9g} {p.y + r * ny:.9g}")
                else:
                    cmds.append(f"A {r:.9g} {r:.9g} 0 0 1 {p.x + r * nx:.9g} {p.y + r * ny:.9g}")
                cmds.append(f"L {q.x + r * nx:.9g} {q.y + r * ny:.9g}")
            first = verts[0]
            q = verts[1]
            ex, ey = q.x - first.x, q.y - first.y
            norm = math.hypot(ex, ey)
            nx, ny = ey / norm, -ex / norm
            cmds.append(f"A {r:.9g} {r:.9g} 0 0 1 {first.x + r * nx:.9g} {first.y + r * ny:.9g}")
            cmds.append("Z")
            shape = f'<path d="{" ".join(cmds)}"/>\n'
    return header + shape + "</g>\n</svg>\n"


def _cmd_body(args) -> int:
    a = _read_body(args.file)
    if args.action == "stats":
        _emit_json(_body_stats(a), args.out)
    elif args.action == "vertices":
        if a.disc_radius > 0 and args.polygonize_disc:
            a = bodies.minkowski_add(
                Body(a.diangles, 0.0), oracle.disc_polygon(a.disc_radius, args.polygonize_disc)
            )
        pts = bodies.vertices(a)
        _emit_json({"vertices": [[p.x, p.y] for p in pts]}, args.out)
    else:  # svg
        _emit(body_svg(a), args.out)
    return 0


# --- lift ----------------------------------------------------------------


def _lift_stats(x: LiftedVector) -> dict:
    return {
        "measure": lifted.measure_ext(x),
        "perimeter": lifted.perimeter_ext(x),
        "deficit": lifted.deficit(x),
        "norm": lifted.norm(x),
        "norm_c": lifted.norm_c(x),
        "norm_bp": lifted.norm_bp(x),
    }


def _cmd_lift(args) -> int:
    if args.action == "stats":
        _emit_json(_lift_stats(_read_lifted(args.file)), args.out)
    elif args.action == "add":
        z = lifted.add(_read_lifted(args.file), _read_lifted(args.other))
        _emit_json(lifted.lifted_to_dict(z), args.out)
    elif args.action == "scale":
        z = lifted.scale_real(_read_lifted(args.file), args.value)
        _emit_json(lifted.lifted_to_dict(z), args.out)
    else:  # eval
        val = rkhs.evaluate(_read_lifted(args.file), args.value)
        _emit_json({"phi": args.value, "value": val}, args.out)
    return 0


# --- check ---------------------------------------------------------------


def _fuzz_iso(trials, seed, max_diangles, tol):
    violations, worst = 0, math.inf
    for i in range(trials):
        x = generators.random_lifted(generators.trial_rng(seed, i), max_diangles)
        o = lifted.perimeter_ext(x)
        slack = lifted.deficit(x)
        bound = -tol * (1.0 + o * o)
        worst = min(worst, slack)
        if slack < bound:
            violations += 1
    return violations, {"min_slack": worst}


def _fuzz_bm(trials, seed, max_diangles, tol):
    violations, worst = 0, math.inf
    for i in range(trials):
        rng = generators.trial_rng(seed, i)
        u = generators.random_body(rng, max_diangles)
        v = generators.random_body(rng, max_diangles)
        rep = inequalities.check_bm_classical(u, v, tol_abs=tol, tol_rel=tol)
        worst = min(worst, rep.slack)
        if not rep.holds:
            violations += 1
    return violations, {"min_slack": worst}


def _fuzz_bmgen(trials, seed, max_diangles, tol):
    violations, checked = 0, 0
    worst = math.inf
    for i in range(trials):
        rng = generators.trial_rng(seed, i)
        x = generators.random_lifted(rng, max_diangles)
        y = generators.random_lifted(rng, max_diangles)
        if lifted.measure_ext(x) <= 0 or lifted.measure_ext(y) <= 0:
            continue
        checked += 1
        rep = inequalities.check_bm_generalized(x, y, tol_abs=tol, tol_rel=tol)
        worst = min(worst, rep.slack)
        if not rep.holds:
            violations += 1
    return violations, {"checked": checked, "min_slack": worst if checked else None}


def _fuzz_schwarz(trials, seed, max_diangles, tol):
    violations, worst = 0, math.inf
    for i in range(trials):
        rng = generators.trial_rng(seed, i)
        x = generators.random_lifted(rng, max_diangles)
        y = generators.random_lifted(rng, max_diangles)
        rep = inequalities.check_schwarz_deficit(x, y, tol_abs=tol, tol_rel=tol)
        worst = min(worst, rep.slack)
        if not rep.holds:
            violations += 1
    return violations, {"min_slack": worst}


_FUZZERS = {"iso": _fuzz_iso, "bm": _fuzz_bm, "bmgen": _fuzz_bmgen, "schwarz": _fuzz_schwarz}


def _cmd_check(args) -> int:
    violations, extra = _FUZZERS[args.inequality](args.trials, args.seed, args.max_diangles, args.tol)
    report = {
        "inequality": args.inequality,
        "trials": args.trials,
        "seed": args.seed,
        "violations": violations,
    }
    report.update(extra)
    _emit_json(report, args.out)
    return 1 if violations else 0


# --- reduce --------------------------------------------------------------


def _cmd_reduce(args) -> int:
    x = _read_lifted(args.file)
    u, v = x.plus, x.minus
    if args.polygonize_disc:
        if u.disc_radius > 0:
            u = bodies.minkowski_add(Body(u.diangles, 0.0), oracle.disc_polygon(u.disc_radius, args.polygonize_disc))
        if v.disc_radius > 0:
            v = bodies.minkowski_add(Body(v.diangles, 0.0), oracle.disc_polygon(v.disc_radius, args.polygonize_disc))
    trace = inequalities.reduce_pair(u, v)
    lines = [json.dumps(step.to_dict(), sort_keys=True) for step in trace.steps]
    w = trace.witness
    ow, mw = bodies.perimeter(w), bodies.area(w)
    summary = {
        "summary": True,
        "steps": len(trace.steps),
        "witness": bodies.body_to_dict(w),
        "witness_sign": trace.witness_sign,
        "witness_perimeter": ow,
        "witness_area": mw,
        "input_perimeter_ext": lifted.perimeter_ext(lifted.lift(u, v)),
        "input_measure_ext": lifted.measure_ext(lifted.lift(u, v)),
        "classical_deficit_of_witness": ow * ow - 4 * PI * mw,
    }
    lines.append(json.dumps(summary, sort_keys=True))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


# --- kernel --------------------------------------------------------------


def _cmd_kernel(args) -> int:
    if args.action == "gram":
        g = rkhs.gram(np.linspace(0.0, PI, args.nodes))
        if args.csv:
            _emit(g.to_csv(), args.out)
        else:
            _emit_json(g.to_dict(), args.out)
    elif args.action == "eig":
        g = rkhs.gram(np.linspace(0.0, PI, args.nodes))
        eigs = rkhs.jacobi_eigenvalues(g.array)
        _emit_json({"nodes": args.nodes, "min_eig": float(eigs[0]), "eigenvalues": list(map(float, eigs))}, args.out)
    elif args.action == "eval":
        wf = rkhs.sample(_read_lifted(args.file), args.nodes)
        if args.csv:
            _emit(wf.to_csv(), args.out)
        else:
            _emit_json(wf.to_dict(), args.out)
    else:  # interp
        with open(args.file) as fh:
            wf = rkhs.width_function_from_dict(json.loads(fh.read()))
        coeffs = rkhs.interpolate(wf.nodes, wf.values, ridge=args.ridge)
        _emit_json({"nodes": list(wf.nodes), "coefficients": list(map(float, coeffs)), "ridge": args.ridge}, args.out)
    return 0


# --- rotation-fn ---------------------------------------------------------


def _cmd_rotation_fn(args) -> int:
    u, v = _read_body(args.file), _read_body(args.other)
    phis = np.linspace(0.0, PI, args.nodes, endpoint=False)
    e_vals = [inequalities.rotation_fn_E(u, v, p) for p in phis]
    f_vals = inequalities._rotation_fn_F_many(u, v, phis)
    cands = inequalities.singular_candidates(u, v)
    phi_star, f_min = inequalities.singular_min(u, v)
    if args.csv:
        rows = ["phi,E,F"]
        rows += [f"{repr(float(p))},{repr(float(e))},{repr(float(f))}" for p, e, f in zip(phis, e_vals, f_vals)]
        _emit("\n".join(rows) + "\n", args.out)
    else:
        _emit_json(
            {
                "phi": list(map(float, phis)),
                "E": list(map(float, e_vals)),
                "F": list(map(float, f_vals)),
                "candidates": list(map(float, cands)),
                "phi_star": phi_star,
                "F_min": f_min,
            },
            args.out,
        )
    return 0


# --- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zonalg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", default=None, help="write output to a file instead of stdout")

    p_body = sub.add_parser("body", help="closed-form quantities of a body")
    p_body.add_argument("action", choices=["stats", "vertices", "svg"])
    p_body.add_argument("file")
    p_body.add_argument("--polygonize-disc", type=int, default=0, metavar="N")
    add_out(p_body)
    p_body.set_defaults(func=_cmd_body)

    p_lift = sub.add_parser("lift", help="operations on lifted vectors")
    p_lift.add_argument("action", choices=["stats", "add", "scale", "eval"])
    p_lift.add_argument("file")
    p_lift.add_argument("other", nargs="?", help="second vector file (for add)")
    p_lift.add_argument("--value", type=float, default=0.0, help="scalar for scale / angle for eval")
    add_out(p_lift)
    p_lift.set_defaults(func=_cmd_lift)

    p_check = sub.add_parser("check", help="fuzz an inequality")
    p_check.add_argument("inequality", choices=sorted(_FUZZERS))
    p_check.add_argument("--trials", type=int, default=1000)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--max-diangles", type=int, default=10)
    p_check.add_argument("--tol", type=float, default=1e-9)
    add_out(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_reduce = sub.add_parser("reduce", help="singular-position reduction trace (JSON lines)")
    p_reduce.add_argument("file", help="lifted vector JSON (the pair to reduce)")
    p_reduce.add_argument("--polygonize-disc", type=int, default=0, metavar="N")
    add_out(p_reduce)
    p_reduce.set_defaults(func=_cmd_reduce)

    p_kernel = sub.add_parser("kernel", help="kernel matrices, eigenvalues, sampling, interpolation")
    p_kernel.add_argument("action", choices=["gram", "eig", "eval", "interp"])
    p_kernel.add_argument("file", nargs="?", help="lifted vector (eval) or width function (interp) JSON")
    p_kernel.add_argument("--nodes", type=int, default=16)
    p_kernel.add_argument("--ridge", type=float, default=0.0)
    p_kernel.add_argument("--csv", action="store_true")
    add_out(p_kernel)
    p_kernel.set_defaults(func=_cmd_kernel)

    p_rot = sub.add_parser("rotation-fn", help="rotation functions E and F over a grid")
    p_rot.add_argument("file", help="fixed body JSON")
    p_rot.add_argument("other", help="rotating zonogon JSON")
    p_rot.add_argument("--nodes", type=int, default=64)
    p_rot.add_argument("--csv", action="store_true")
    add_out(p_rot)
    p_rot.set_defaults(func=_cmd_rotation_fn)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ZonalgError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
