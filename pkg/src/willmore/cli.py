"""Command line front end: ``willmore <command> SURFACE [options]``.

Exit status is 0 on success, 1 when ``verify`` finds a failing check and 2
on unreadable input or bad options.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import branch, forms, geometry, invariants, numerics
from .io import ConfigError, dump_report, load_surface
from .series import SeriesError
from .surface import stereo_to_sphere

APPROX_TOL = 1e-8


def _zero(s, exact):
    return s.is_zero() if exact else s.max_abs() <= APPROX_TOL


def _num(x):
    c = complex(x)
    return c.real if c.imag == 0 else [c.real, c.imag]


def _leading(s, depth=1):
    """Terms of the lowest ``depth`` degrees, as ``[a, b, p, value]`` rows."""
    if s.is_zero():
        return []
    d0 = s.ord()
    return [[a, b, p, _num(c)] for (a, b, p), c in sorted(s.terms.items()) if a + b < d0 + depth]


def _model_summary(m):
    ex = m.exact
    return {
        "name": m.name,
        "kind": m.kind,
        "theta0": m.theta0,
        "trunc": m.trunc,
        "conformal": _zero(geometry.conformality_defect(m), ex),
        "minimal": _zero(m.geo.H, ex),
        "codazzi": _zero(geometry.codazzi_defect(m), ex),
        "liouville": _zero(geometry.liouville_defect(m), ex),
        "conformal_factor_leading": _leading(m.geo.e2l),
        "mean_curvature_leading": [_leading(c) for c in m.geo.H],
    }


def cmd_build(spec, args):
    return _model_summary(spec.model(args.order, args.exact)), True


def cmd_invert(spec, args):
    im = spec.inverted(args.order, args.exact)
    rep = _model_summary(im)
    rep["willmore_equation"] = _zero(invariants.willmore_residual(im), args.exact)
    rep["center"] = spec.center_floats()
    return rep, True


def _residue_block(m, args):
    rs = invariants.residues(m)
    out = rs.to_json()
    quad = {}
    for kind in invariants.KINDS:
        c = invariants.noether_current(m, kind)
        q = numerics.quad_residue(c, args.radius, args.samples, args.tolerance)
        _, spread = numerics.radius_sweep(c, (0.6 * args.radius, args.radius, 1.4 * args.radius), args.samples)
        quad[kind] = {**q.to_json(), "radius_spread": spread}
    out["quadrature"] = quad
    return out


def cmd_residues(spec, args):
    m = spec.model(args.order, args.exact)
    im = spec.inverted(args.order, args.exact)
    a, b = _residue_block(m, args), _residue_block(im, args)
    report = {"surface": a, "inverted": b}
    if not any(spec.center_floats()):
        corr, _, _ = invariants.correspondence_check(m)
        report["correspondence"] = {k: [float(v) for v in vals] for k, vals in corr.items()}
    return report, True


def cmd_forms(spec, args):
    im = spec.inverted(args.order, args.exact)
    q = forms.bryant_quartic(im)
    st = stereo_to_sphere(im)
    qa = forms.quartic_coefficient(st)
    qb = forms.quartic_via_gauss_coefficient(st)
    r4 = im.padded(4)
    t = forms.montiel_cubic(r4)
    rep = {
        "quartic": q.to_json(),
        "quartic_zero": _zero(q.value, args.exact),
        "quartic_routes_agree": _zero(qa - qb, args.exact),
        "cubic_R4": t.to_json(),
    }
    if args.octic:
        o = forms.montiel_octic(r4)
        rep["octic_R4"] = o.to_json()
        rep["octic_routes_agree"] = _zero(o.agreement, args.exact)
    return rep, True


def _branch_report(spec, args):
    im = spec.inverted(args.order, args.exact)
    e = branch.extract_expansion(im)
    rep = e.to_json()
    rep["cancellations"] = {k: v["zero"] for k, v in branch.cancellation_check(e).items()}
    rep["second_residue"] = branch.second_residue(im)
    rep["a0_dot_gamma0"] = _num(sum(a * g for a, g in zip(e.A0, e.gamma0)))
    if spec.ends is not None:
        rep["jorge_meeks"] = branch.jorge_meeks(spec.ends)
        rep["predicted_energy_pi"] = branch.predicted_energy(spec.ends)
    return rep, e, im


def cmd_branch(spec, args):
    rep, _, _ = _branch_report(spec, args)
    return rep, True


def cmd_energy(spec, args):
    value, history = numerics.willmore_energy(spec.global_data(), spec.center_floats(), tol=args.tolerance)
    rep = {"energy": value, "energy_over_pi": value / math.pi, "history_over_pi": [h / math.pi for h in history]}
    if spec.expected_energy_pi is not None:
        rep["expected_over_pi"] = spec.expected_energy_pi
        rep["relative_error"] = abs(value / math.pi - spec.expected_energy_pi) / spec.expected_energy_pi
    return rep, True


def run_checks(spec, args):
    """Every invariant the tool can test on one surface, as ``{name: bool}``."""
    ex = args.exact
    m = spec.model(args.order, ex)
    im = spec.inverted(args.order, ex)
    checks = {}
    for label, mod in (("surface", m), ("inverted", im)):
        checks[f"{label}.conformal"] = _zero(geometry.conformality_defect(mod), ex)
        checks[f"{label}.codazzi"] = _zero(geometry.codazzi_defect(mod), ex)
        checks[f"{label}.liouville"] = _zero(geometry.liouville_defect(mod), ex)
        for kind in invariants.KINDS:
            c = invariants.noether_current(mod, kind)
            checks[f"{label}.{kind}_closed"] = _zero(invariants.closedness_defect(c), ex)
            q = numerics.quad_residue(c, args.radius, args.samples, args.tolerance)
            checks[f"{label}.{kind}_quadrature"] = q.ok
    checks["surface.minimal"] = _zero(m.geo.H, ex)
    if not any(spec.center_floats()):
        corr, _, _ = invariants.correspondence_check(m)
        checks["residue_correspondence"] = invariants.correspondence_holds(corr, 0 if ex else APPROX_TOL)
    if spec.ends is not None and spec.ends.genus == 0:
        checks["inverted.quartic_zero"] = _zero(forms.quartic_coefficient(im), ex)
    if im.theta0 >= 3:
        rep, e, _ = _branch_report(spec, args)
        checks["branch.consistency_slot"] = e.consistency
        checks["branch.template"] = not e.template_violations
        if not any(e.gamma0):
            for k, ok in rep["cancellations"].items():
                checks[f"branch.cancellation {k}"] = ok
        checks["branch.second_residue_bound"] = rep["second_residue"] <= im.theta0 - 2
    elif im.theta0 == 1 and im.kind == "willmore_branch":
        rep, e, _ = _branch_report(spec, args)
        checks["branch.a0_dot_gamma0"] = rep["a0_dot_gamma0"] == 0
    if spec.ends is not None:
        try:
            branch.jorge_meeks(spec.ends)
            checks["ends.parity"] = True
        except branch.ParityViolation:
            checks["ends.parity"] = False
    return checks


def cmd_verify(spec, args):
    checks = run_checks(spec, args)
    return {"checks": checks, "passed": all(checks.values())}, all(checks.values())


COMMANDS = {
    "build": (cmd_build, "expand the minimal immersion and summarize its geometry"),
    "invert": (cmd_invert, "invert about the configured centre and summarize"),
    "residues": (cmd_residues, "Noether residues, flux and quadrature cross-checks"),
    "forms": (cmd_forms, "quartic and cubic (optionally octic) differentials"),
    "branch": (cmd_branch, "branch-point expansion and cancellation pairings"),
    "verify": (cmd_verify, "run every invariant check; exit 1 on failure"),
    "energy": (cmd_energy, "Willmore energy of the inverted surface by quadrature"),
}


def build_parser():
    p = argparse.ArgumentParser(prog="willmore", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        s = sub.add_parser(name, help=help_text)
        s.add_argument("surface", help="surface file (JSON or TOML) or corpus name")
        s.add_argument("--order", type=int, default=12, help="truncation order N (default 12)")
        s.add_argument("--backend", choices=("exact", "approx"), default="exact")
        s.add_argument("--output", "-o", help="write the JSON report here")
        s.add_argument("--summary", action="store_true", help="print a readable table instead of JSON")
        s.add_argument("--radius", type=float, default=0.5)
        s.add_argument("--samples", type=int, default=256)
        s.add_argument("--tolerance", type=float, default=1e-9)
        if name == "forms":
            s.add_argument("--octic", action="store_true", help="also compute the octic form (slow)")
    return p


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}{k}." if not isinstance(v, dict) else f"{prefix}{k}.")
    else:
        yield prefix.rstrip("."), obj


def print_summary(report, out=None):
    out = out or sys.stdout
    rows = list(_flatten(report))
    width = max((len(k) for k, _ in rows), default=0)
    for k, v in rows:
        if isinstance(v, bool):
            v = "yes" if v else "no"
        out.write(f"{k.ljust(width)}  {v}\n")


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    args.exact = args.backend == "exact"
    if args.order < 6 and args.command in ("branch", "verify"):
        print("error: --order must be at least 6 for branch extraction", file=sys.stderr)
        return 2
    if args.samples < 8 or args.radius <= 0:
        print("error: need --samples >= 8 and --radius > 0", file=sys.stderr)
        return 2
    try:
        spec = load_surface(args.surface)
        fn, _ = COMMANDS[args.command]
        report, ok = fn(spec, args)
        if args.output:
            dump_report(report, args.output)
        if args.summary:
            print_summary(report)
        elif not args.output:
            dump_report(report)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SeriesError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
