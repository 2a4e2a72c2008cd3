"""Command-line front end: ``hdruled <command> [options]``.

Commands: check, synthesize, inverse, developable, diff, example.  Specs can
be given as flags or in an INI config file (``--config``); flags win.

Curve specs::

    helix | helix:r=2,c=0.5 | circle:r=1 | line:px=0,py=0,pz=0,vx=1,vy=0,vz=0
    const:1,0,0 | cos(t), sin(t), t        (three DSL expressions)

Ruling specs for ``inverse`` and directors for ``developable`` may also be
``field:X`` with X one of t, n, b, c, w, meaning that frame field of the base.
"""
from __future__ import annotations

import argparse
import configparser
import json
import math
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from . import __version__
from .curves import (Curve3, HyperDualCurve, circle,
                     curve_from_frame_lanes, frame_field_curve, helix, line)
from .expr import EvalError, ParseError, parse
from .expr import evaluate as eval_expr
from .mesh import (developability_report, fmt, sample_mesh, write_curve_csv,
                   write_obj)
from .scalars import DomainError, derivatives_of
from .study import (MembershipError, PreconditionError, RuledSurface3,
                    decompose, helix_reference_dual_vectors, inverse_pair,
                    is_developable_dual, pair_from_unit_gamma)
from .vectors import (DEFAULT_TOL, on_hyperdual_sphere, on_unit_dual_sphere,
                      on_unit_hyperdual_sphere)

FRAME_PRESETS = {"frenet": "t,n,b,n", "adapted": "n,c,w,c"}
DEFAULTS = {
    "samples": 200, "tol": DEFAULT_TOL, "nt": 128, "nu": 32, "u_min": -1.0, "u_max": 1.0,
    "t0": 0.0, "t1": 2 * math.pi, "out_dir": ".",
}


class SpecError(ValueError):
    """Malformed curve or gamma specification."""


class Settings:
    """Flag values layered over an optional config file and the defaults."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.cfg = configparser.ConfigParser()
        if getattr(args, "config", None):
            if not self.cfg.read(args.config, encoding="utf-8"):
                raise SpecError(f"cannot read config file {args.config!r}")

    def get(self, section: str, key: str, default: Any = None, conv: Callable = str):
        v = getattr(self.args, key, None)
        if v is not None:
            return conv(v)
        if self.cfg.has_option(section, key):
            return conv(self.cfg.get(section, key))
        if self.cfg.has_option("sampling", key):
            return conv(self.cfg.get("sampling", key))
        if default is None and key in DEFAULTS:
            default = DEFAULTS[key]
        return conv(default) if default is not None else None

    def sampling(self, key: str):
        conv = int if key in ("samples", "nt", "nu") else (str if key == "out_dir" else float)
        return self.get("sampling", key, None, conv)

    @property
    def domain(self) -> tuple[float, float]:
        t0, t1 = self.sampling("t0"), self.sampling("t1")
        if not t0 < t1:
            raise SpecError(f"domain needs t0 < t1, got [{t0}, {t1}]")
        return t0, t1


def _kv(body: str) -> dict[str, float]:
    out = {}
    for part in filter(None, (p.strip() for p in body.split(","))):
        if "=" not in part:
            raise SpecError(f"expected key=value, got {part!r}")
        k, v = part.split("=", 1)
        try:
            out[k.strip()] = float(v)
        except ValueError:
            raise SpecError(f"not a number in {part!r}") from None
    return out


def parse_curve_spec(text: str, domain, base: Curve3 | None = None) -> Curve3:
    """Build a :class:`Curve3` from a textual spec (see module docstring)."""
    text = text.strip()
    name, _, body = text.partition(":")
    name = name.strip()
    try:
        if name in ("helix", "circle", "line"):
            p = _kv(body)
            if name == "helix":
                curve = helix(p.pop("r", 1.0), p.pop("c", 1.0), domain)
            elif name == "circle":
                curve = circle(p.pop("r", 1.0), domain)
            else:
                pt = [p.pop(k, 0.0) for k in ("px", "py", "pz")]
                curve = line(pt, [p.pop("vx", 1.0), p.pop("vy", 0.0), p.pop("vz", 0.0)], domain)
            if p:
                raise SpecError(f"unknown parameters: {', '.join(sorted(p))}")
            return curve
        if name == "const":
            vals = [float(x) for x in body.split(",")]
            if len(vals) != 3:
                raise SpecError("const needs three numbers")
            return Curve3.constant(vals, domain, f"const({body})")
        if name == "field":
            if base is None:
                raise SpecError("field:X needs a base curve")
            return frame_field_curve(base, body.strip())
    except ValueError as exc:
        raise SpecError(f"bad curve spec {text!r}: {exc}") from exc
    parts = text.split(",")
    if len(parts) != 3:
        raise SpecError(f"curve spec {text!r} is neither a builtin nor three expressions")
    try:
        return Curve3.from_expressions([p.strip() for p in parts], domain)
    except ParseError as exc:
        raise SpecError(f"in {text!r}: {exc}") from exc


def build_gamma(st: Settings) -> HyperDualCurve:
    domain = st.domain
    explicit = [st.get("gamma", f"lane{k}") for k in range(4)]
    if any(explicit):
        if not all(explicit):
            raise SpecError("explicit gamma needs all of --lane0 .. --lane3")
        lanes = [parse_curve_spec(s, domain) for s in explicit]
        return HyperDualCurve(lanes, domain, "explicit")
    curve = parse_curve_spec(st.get("gamma", "curve", "helix"), domain)
    frame = st.get("gamma", "frame", "frenet")
    if frame not in FRAME_PRESETS:
        raise SpecError(f"frame must be one of {', '.join(FRAME_PRESETS)}")
    pattern = st.get("gamma", "lanes", FRAME_PRESETS[frame])
    try:
        return curve_from_frame_lanes(curve, pattern)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc


@dataclass
class Outcome:
    """Collected check results of one command."""

    failures: list[str] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)

    def check(self, name: str, ok: bool, detail: str = ""):
        status = "PASS" if ok else "FAIL"
        self.lines.append(f"{status}  {name}" + (f"  ({detail})" if detail else ""))
        if not ok:
            self.failures.append(name)

    def note(self, text: str):
        self.lines.append(text)

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _sphere_predicate(kind: str):
    if kind == "dual":
        return lambda g, tol: on_unit_dual_sphere(g.A, tol)
    if kind == "hyperdual":
        return on_hyperdual_sphere
    if kind == "unit-hyperdual":
        return on_unit_hyperdual_sphere
    raise SpecError(f"unknown sphere {kind!r}")


def membership_table(G: HyperDualCurve, kind: str, samples: int, tol: float):
    pred = _sphere_predicate(kind)
    worst: dict[str, tuple[float, float]] = {}
    for t in G.sample_params(samples):
        for name, v in pred(G(t), tol).conditions.items():
            if name not in worst or abs(v) > worst[name][0]:
                worst[name] = (abs(v), float(t))
    return worst


def _membership_into(out: Outcome, label: str, G: HyperDualCurve, kind: str, samples: int,
                     tol: float) -> dict:
    worst = membership_table(G, kind, samples, tol)
    out.note(f"{label}: {kind} sphere membership over {samples} samples (tol {tol:g})")
    out.note(f"  {'condition':<16} {'max |violation|':>24} {'at t':>24}")
    for name, (v, t) in worst.items():
        out.note(f"  {name:<16} {fmt(v):>24} {fmt(t):>24}")
        out.check(f"{label} {name}", v <= tol, f"max {v:.3e}")
    return worst


def cmd_check(st: Settings) -> Outcome:
    G = build_gamma(st)
    kind = st.get("check", "sphere", "unit-hyperdual")
    samples, tol = st.sampling("samples"), st.sampling("tol")
    out = Outcome()
    worst = _membership_into(out, G.name, G, kind, samples, tol)
    csv_path = st.get("check", "csv")
    if csv_path:
        rows = ["condition,max_violation,t,pass"]
        rows += [f"{k},{fmt(v)},{fmt(t)},{int(v <= tol)}" for k, (v, t) in worst.items()]
        with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(rows) + "\n")
    return out


def _out_dir(st: Settings) -> str:
    d = st.sampling("out_dir")
    os.makedirs(d, exist_ok=True)
    return d


def _mesh(st: Settings, S: RuledSurface3, path: str):
    m = sample_mesh(S, S.domain, (st.sampling("u_min"), st.sampling("u_max")),
                    st.sampling("nt"), st.sampling("nu"))
    write_obj(m, path)


def cmd_synthesize(st: Settings) -> Outcome:
    G = build_gamma(st)
    d = _out_dir(st)
    samples, tol = st.sampling("samples"), st.sampling("tol")
    out = Outcome()
    on_sphere = all(on_hyperdual_sphere(G(t), tol) for t in G.sample_params(samples))
    if not on_sphere:
        out.note(f"WARNING {G.name} is off the hyper-dual sphere; constructions are still emitted")
    surface_I, congruence = decompose(G)
    _mesh(st, surface_I, os.path.join(d, "I.obj"))
    write_curve_csv(congruence.base, G.domain, samples, os.path.join(d, "congruence_base.csv"))
    out.note(f"wrote I.obj, congruence_base.csv for {G.name}")
    ts = G.sample_params(samples)
    rep_I = developability_report(surface_I, G.domain, samples, tol)
    out.note(f"I: max |det(beta', alpha, alpha')| = {fmt(rep_I.max_abs_residual)}")
    dres = [is_developable_dual(G, t, tol) for t in ts]
    out.note(f"dual developability residuals: max |a0'.a2'| = {fmt(max(abs(r.real) for r in dres))}, "
             f"max |a0'.a3'+a1'.a2'| = {fmt(max(abs(r.dual) for r in dres))}")
    unit = all(on_unit_hyperdual_sphere(G(t), tol) for t in ts)
    if unit:
        pair = pair_from_unit_gamma(G, samples, tol)
        _mesh(st, pair.phi1, os.path.join(d, "pair_phi1.obj"))
        _mesh(st, pair.phi2, os.path.join(d, "pair_phi2.obj"))
        write_curve_csv(pair.base_k, G.domain, samples, os.path.join(d, "base_k.csv"))
        out.note("wrote pair_phi1.obj, pair_phi2.obj, base_k.csv")
        out.check("pair common base", pair.max_base_gap <= tol, f"max gap {pair.max_base_gap:.3e}")
        ortho = max(abs(float(G(t).a0 @ G(t).a2)) for t in ts)
        out.check("pair rulings perpendicular", ortho <= tol, f"max |a0.a2| {ortho:.3e}")
        r1 = developability_report(pair.phi1, G.domain, samples, tol)
        r2 = developability_report(pair.phi2, G.domain, samples, tol)
        out.note(f"phi1: max |det| = {fmt(r1.max_abs_residual)}")
        out.note(f"phi2: max |det| = {fmt(r2.max_abs_residual)}")
        out.note("t,f,g")
        for t in ts[:: max(1, samples // 20)]:
            out.note(f"{fmt(t)},{fmt(pair.f(float(t)))},{fmt(pair.g(float(t)))}")
    else:
        out.note("not on the unit hyper-dual sphere: surface pair skipped")
    with open(os.path.join(d, "report.txt"), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(out.text())
    return out


def cmd_inverse(st: Settings) -> Outcome:
    domain = st.domain
    K = parse_curve_spec(st.get("inverse", "base", "helix"), domain)
    a = parse_curve_spec(st.get("inverse", "ruling1", "field:t"), domain, K)
    a_star = parse_curve_spec(st.get("inverse", "ruling2", "field:n"), domain, K)
    samples, tol = st.sampling("samples"), st.sampling("tol")
    d = _out_dir(st)
    g1, g2 = inverse_pair(K, a, a_star, samples, tol)
    write_curve_csv(g1, domain, samples, os.path.join(d, "gamma1.csv"))
    write_curve_csv(g2, domain, samples, os.path.join(d, "gamma2.csv"))
    out = Outcome()
    out.note("wrote gamma1.csv, gamma2.csv")
    _membership_into(out, "gamma1", g1, "unit-hyperdual", samples, tol)
    _membership_into(out, "gamma2", g2, "unit-hyperdual", samples, tol)
    with open(os.path.join(d, "report.txt"), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(out.text())
    return out


def cmd_developable(st: Settings) -> Outcome:
    samples, tol = st.sampling("samples"), st.sampling("tol")
    out = Outcome()
    base_spec = st.get("surface", "base")
    if base_spec:
        domain = st.domain
        base = parse_curve_spec(base_spec, domain)
        director = parse_curve_spec(st.get("surface", "director", "field:t"), domain, base)
        rep = developability_report(RuledSurface3(base, director), domain, samples, tol)
        out.note(f"surface {base.name} + u {director.name}")
        out.note(f"max |det(beta', alpha, alpha')| = {fmt(rep.max_abs_residual)}")
        out.check("developable", rep.verdict, f"tol {tol:g}")
        rows = [(t, r) for t, r in rep.samples]
        header = "t,residual"
    else:
        G = build_gamma(st)
        res = [(float(t), is_developable_dual(G, t, tol)) for t in G.sample_params(samples)]
        mr = max(abs(r.real) for _, r in res)
        md = max(abs(r.dual) for _, r in res)
        out.note(f"gamma {G.name}")
        out.note(f"max |a0'.a2'| = {fmt(mr)}; max |a0'.a3' + a1'.a2'| = {fmt(md)}")
        out.check("developable in D", mr <= tol and md <= tol, f"tol {tol:g}")
        rows = [(t, r.real, r.dual) for t, r in res]
        header = "t,a0p.a2p,a0p.a3p+a1p.a2p"
    csv_path = st.get("developable", "csv")
    if csv_path:
        with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(header + "\n" + "".join(",".join(fmt(v) for v in r) + "\n" for r in rows))
    return out


def cmd_diff(st: Settings) -> Outcome:
    src = st.get("diff", "expr")
    at = st.get("diff", "at", 0.0, float)
    tree = parse(src)
    f, df, d2f = derivatives_of(lambda t: eval_expr(tree, t), at)
    out = Outcome()
    out.note(f"{fmt(f)} {fmt(df)} {fmt(d2f)}")
    return out


def _max_gap(ts, fa, fb) -> float:
    return max(float(np.max(np.abs(fa(t) - fb(t)))) for t in ts)


def example_helix(st: Settings, r: float, c: float, out: Outcome, d: str):
    domain = st.domain
    samples, tol = st.sampling("samples"), st.sampling("tol")
    K = helix(r, c, domain)
    tK, nK = frame_field_curve(K, "t"), frame_field_curve(K, "n")
    phi1, phi2 = RuledSurface3(K, tK, "phi1"), RuledSurface3(K, nK, "phi2")
    _mesh(st, phi1, os.path.join(d, "phi1.obj"))
    _mesh(st, phi2, os.path.join(d, "phi2.obj"))
    write_curve_csv(K, domain, samples, os.path.join(d, "base_k.csv"))
    ts = K.sample_params(samples)
    w = math.hypot(r, c)

    def phi2_reference(t, v):
        return np.array([(r - v) * math.cos(t), (r - v) * math.sin(t), c * t])

    def phi1_reference(t, u):
        return np.array([r * math.cos(t) - u * r * math.sin(t) / w,
                         r * math.sin(t) + u * r * math.cos(t) / w, c * t + u * c / w])

    gap1 = max(_max_gap(ts, lambda t: phi1(t, u), lambda t: phi1_reference(t, u)) for u in (-1, 0.5, 1))
    gap2 = max(_max_gap(ts, lambda t: phi2(t, v), lambda t: phi2_reference(t, v)) for v in (-1, 0.5, 1))
    out.check("phi1 matches reference closed form", gap1 <= 1e-12, f"max gap {gap1:.3e}")
    out.check("phi2 matches reference closed form", gap2 <= 1e-12, f"max gap {gap2:.3e}")
    r1 = developability_report(phi1, domain, samples, tol)
    r2 = developability_report(phi2, domain, samples, tol)
    out.check("phi1 developable", r1.verdict, f"max |det| {r1.max_abs_residual:.3e}")
    dev2 = max(abs(res - c) for _, res in r2.samples)
    out.check("phi2 det equals c", dev2 <= tol, f"det = {fmt(r2.samples[0][1])}, c = {fmt(c)}")
    g1, g2 = inverse_pair(K, tK, nK, samples, tol)
    write_curve_csv(g1, domain, samples, os.path.join(d, "gamma1.csv"))
    write_curve_csv(g2, domain, samples, os.path.join(d, "gamma2.csv"))
    _membership_into(out, "gamma1", g1, "unit-hyperdual", samples, tol)
    _membership_into(out, "gamma2", g2, "unit-hyperdual", samples, tol)

    delta = ["# computed lanes minus reference closed forms, helix r=%s c=%s" % (fmt(r), fmt(c)),
             "t,dA_real,dA_dual,dAstar_real,dAstar_dual,dA_dual_vs_oracle"]
    worst = np.zeros(5)
    for t in ts:
        g = g1(t)
        A_pr, As_pr = helix_reference_dual_vectors(float(t), r, c)
        oracle = np.cross(K(t), tK(t))
        row = [np.max(np.abs(g.a0 - A_pr.a)), np.max(np.abs(g.a1 - A_pr.a_star)),
               np.max(np.abs(g.a2 - As_pr.a)), np.max(np.abs(g.a3 - As_pr.a_star)),
               np.max(np.abs(g.a1 - oracle))]
        worst = np.maximum(worst, row)
        delta.append(",".join([fmt(t)] + [fmt(v) for v in row]))
    with open(os.path.join(d, "delta.csv"), "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(delta) + "\n")
    out.check("A* matches reference form", max(worst[2], worst[3]) <= 1e-12,
              f"max {max(worst[2], worst[3]):.3e}")
    out.check("A dual part matches K x t_K", worst[4] <= 1e-12, f"max {worst[4]:.3e}")
    out.note(f"reference A differs from the construction by up to {fmt(max(worst[0], worst[1]))} "
             "(prefactor 1/(r^2+c^2) vs 1/sqrt(r^2+c^2); sign of second moment component)")


def example_pair(st: Settings, r: float, c: float, pattern: str, out: Outcome, d: str):
    domain = st.domain
    samples, tol = st.sampling("samples"), st.sampling("tol")
    alpha = helix(r, c, domain)
    G = curve_from_frame_lanes(alpha, pattern)
    _membership_into(out, G.name, G, "unit-hyperdual", samples, tol)
    pair = pair_from_unit_gamma(G, samples, tol)
    _mesh(st, pair.phi1, os.path.join(d, "phi1.obj"))
    _mesh(st, pair.phi2, os.path.join(d, "phi2.obj"))
    write_curve_csv(pair.base_k, domain, samples, os.path.join(d, "base_k.csv"))
    ts = G.sample_params(samples)
    a0, _, a2, _ = G.lanes
    # expected base: b - t for (t,n,b,n), w - n for (n,c,w,c); both are a2 - a0
    gap = _max_gap(ts, pair.base_k, lambda t: a2(t) - a0(t))
    label = "k = b - t" if pattern == FRAME_PRESETS["frenet"] else "k = w - n"
    out.check(label, gap <= tol, f"max gap {gap:.3e}")
    ortho = max(abs(float(a0(t) @ a2(t))) for t in ts)
    out.check("rulings perpendicular", ortho <= tol, f"max {ortho:.3e}")
    r1 = developability_report(pair.phi1, domain, samples, tol)
    r2 = developability_report(pair.phi2, domain, samples, tol)
    out.note(f"phi1: max |det| = {fmt(r1.max_abs_residual)}; phi2: max |det| = {fmt(r2.max_abs_residual)}")
    with open(os.path.join(d, "delta.csv"), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# base_k minus reference closed form ({label})\nt,gap\n")
        for t in ts:
            fh.write(f"{fmt(t)},{fmt(np.max(np.abs(pair.base_k(t) - (a2(t) - a0(t)))))}\n")


def cmd_example(st: Settings) -> Outcome:
    name = st.args.name
    r = st.get("example", "r", 1.0, float)
    c = st.get("example", "c", 1.0, float)
    d = _out_dir(st)
    out = Outcome()
    out.note(f"example {name} (r={fmt(r)}, c={fmt(c)})")
    if name == "helix":
        example_helix(st, r, c, out, d)
    else:
        example_pair(st, r, c, FRAME_PRESETS["frenet" if name == "frenet" else "adapted"], out, d)
    with open(os.path.join(d, "report.txt"), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(out.text())
    return out


def _common(p: argparse.ArgumentParser):
    p.add_argument("--config", help="INI file with [sampling]/[gamma]/... sections")
    p.add_argument("--out-dir", dest="out_dir")
    p.add_argument("--samples", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--nt", type=int)
    p.add_argument("--nu", type=int)
    p.add_argument("--u-min", dest="u_min", type=float)
    p.add_argument("--u-max", dest="u_max", type=float)
    p.add_argument("--t0", type=float)
    p.add_argument("--t1", type=float)


def _gamma_flags(p: argparse.ArgumentParser):
    p.add_argument("--curve", help="base curve spec for frame lanes (default helix)")
    p.add_argument("--frame", choices=sorted(FRAME_PRESETS))
    p.add_argument("--lanes", help="four frame fields, e.g. t,n,b,n")
    for k in range(4):
        p.add_argument(f"--lane{k}", help=f"explicit curve spec for lane a{k}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hdruled", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="sphere membership of a hyper-dual curve")
    _common(p)
    _gamma_flags(p)
    p.add_argument("--sphere", choices=["dual", "hyperdual", "unit-hyperdual"])
    p.add_argument("--csv")

    p = sub.add_parser("synthesize", help="ruled surfaces from a hyper-dual curve")
    _common(p)
    _gamma_flags(p)

    p = sub.add_parser("inverse", help="hyper-dual curves from two rulings on a common base")
    _common(p)
    p.add_argument("--base")
    p.add_argument("--ruling1")
    p.add_argument("--ruling2")

    p = sub.add_parser("developable", help="developability residuals")
    _common(p)
    _gamma_flags(p)
    p.add_argument("--base", help="surface mode: base curve spec")
    p.add_argument("--director", help="surface mode: director spec (default field:t)")
    p.add_argument("--csv")

    p = sub.add_parser("diff", help="value, first and second derivative of an expression")
    p.add_argument("expr")
    p.add_argument("--at", type=float)
    p.add_argument("--config")

    p = sub.add_parser("example", help="reproduce a worked example")
    p.add_argument("name", choices=["helix", "frenet", "adapted"])
    _common(p)
    p.add_argument("--r", type=float)
    p.add_argument("--c", type=float)
    return parser


COMMANDS = {
    "check": cmd_check,
    "synthesize": cmd_synthesize,
    "inverse": cmd_inverse,
    "developable": cmd_developable,
    "diff": cmd_diff,
    "example": cmd_example,
}


def _fail(command: str, kind: str, message: str, **extra) -> int:
    payload = {"command": command, "status": "error", "kind": kind, "message": message, **extra}
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)
    return 2


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        st = Settings(args)
        out = COMMANDS[args.command](st)
    except ParseError as exc:
        return _fail(args.command, "parse", str(exc), offset=exc.offset)
    except EvalError as exc:
        return _fail(args.command, "domain", str(exc), offset=exc.offset)
    except PreconditionError as exc:
        return _fail(args.command, "precondition", str(exc), t=exc.t)
    except (SpecError, MembershipError, DomainError, ValueError, OSError) as exc:
        return _fail(args.command, type(exc).__name__, str(exc))
    sys.stdout.write(out.text())
    if out.failures:
        print(json.dumps({"command": args.command, "status": "fail", "failures": out.failures},
                         sort_keys=True), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
