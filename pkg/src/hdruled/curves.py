"""Parametric space curves with exact derivatives, moving frames and
hyper-dual curves assembled from four real lanes.

A :class:`Curve3` wraps a *generic* position map: a callable taking a
scalar of any kind (float, dual, hyper-dual, nested) and returning three
scalars of that kind.  Derivatives of every order then come from
:func:`hdruled.scalars.jet`, and curves derived from other curves (frame
fields, cross products of lanes, ...) stay differentiable for free.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np

from . import expr as _expr
from .scalars import DomainError, jet, real_part, reciprocal
from .scalars import cos as gcos
from .scalars import sin as gsin
from .scalars import HyperDual
from .vectors import (HyperDualVec3, gcross, gdot, gnorm, gscale, gadd,
                      hd_norm)

GenericFn = Callable[[Any], Sequence[Any]]

DEGENERATE_TOL = 1e-12
FRAME_FIELDS = ("t", "n", "b", "c", "w")


class DegenerateCurveError(ValueError):
    """A frame or arc-length quantity is undefined at this parameter."""


def _as_array(v: Sequence[Any]) -> np.ndarray:
    return np.array([real_part(x) for x in v], dtype=float)


class Curve3:
    """Parametric curve t -> R^3 on the interval ``domain``.

    ``fn`` must accept any scalar kind.  ``closed_form`` optionally maps a
    float t to ``(p, d1, d2, d3)`` and is used in place of automatic
    differentiation for real arguments.
    """

    def __init__(self, fn: GenericFn, domain=(0.0, 2 * math.pi), name: str = "curve",
                 closed_form: Callable[[float], tuple] | None = None):
        t0, t1 = float(domain[0]), float(domain[1])
        self.fn = fn
        self.domain = (t0, t1)
        self.name = name
        self.closed_form = closed_form

    def __repr__(self):
        return f"Curve3({self.name!r}, domain={self.domain})"

    def __call__(self, t: float) -> np.ndarray:
        return _as_array(self.fn(float(t)))

    def jet(self, s: Any, order: int) -> list[list[Any]]:
        """``[p, d1, ..., d_order]`` at ``s`` as lists of generic scalars."""
        if self.closed_form is not None and order <= 3 and isinstance(s, (float, int)):
            return [list(v) for v in self.closed_form(float(s))[: order + 1]]
        return [list(v) for v in jet(self.fn, s, order)]

    def derivatives(self, t: float, order: int = 3) -> list[np.ndarray]:
        return [_as_array(v) for v in self.jet(float(t), order)]

    def evaluate(self, t: float) -> "CurveSample":
        p, d1, d2, d3 = self.derivatives(t, 3)
        return CurveSample(p, d1, d2, d3)

    def sample_params(self, n: int) -> np.ndarray:
        return np.linspace(self.domain[0], self.domain[1], n)

    def with_domain(self, domain) -> "Curve3":
        return Curve3(self.fn, domain, self.name, self.closed_form)

    @classmethod
    def from_expressions(cls, exprs: Sequence[str], domain=(0.0, 2 * math.pi),
                         name: str | None = None) -> "Curve3":
        """Curve whose components are DSL expressions in ``t``."""
        if len(exprs) != 3:
            raise ValueError("a curve needs exactly three component expressions")
        trees = [_expr.parse(s) for s in exprs]

        def fn(s):
            return [_expr.evaluate(tree, s) for tree in trees]

        return cls(fn, domain, name or "expr(" + ", ".join(exprs) + ")")

    @classmethod
    def constant(cls, v, domain=(0.0, 1.0), name: str = "constant") -> "Curve3":
        v = tuple(float(x) for x in np.asarray(v, dtype=float).reshape(3))
        zero = np.zeros(3)

        def closed(t):
            return (np.array(v), zero, zero, zero)

        return cls(lambda s: list(v), domain, name, closed)


@dataclass(frozen=True)
class CurveSample:
    p: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    d3: np.ndarray


def helix(r: float = 1.0, c: float = 1.0, domain=(0.0, 2 * math.pi)) -> Curve3:
    """``(r cos t, r sin t, c t)``."""
    r, c = float(r), float(c)

    def fn(s):
        return [r * gcos(s), r * gsin(s), c * s]

    def closed(t):
        ct, st = math.cos(t), math.sin(t)
        return (np.array([r * ct, r * st, c * t]),
                np.array([-r * st, r * ct, c]),
                np.array([-r * ct, -r * st, 0.0]),
                np.array([r * st, -r * ct, 0.0]))

    return Curve3(fn, domain, f"helix(r={r:g}, c={c:g})", closed)


def circle(r: float = 1.0, domain=(0.0, 2 * math.pi)) -> Curve3:
    """``(r cos t, r sin t, 0)``."""
    r = float(r)

    def fn(s):
        return [r * gcos(s), r * gsin(s), 0.0]

    def closed(t):
        ct, st = math.cos(t), math.sin(t)
        return (np.array([r * ct, r * st, 0.0]),
                np.array([-r * st, r * ct, 0.0]),
                np.array([-r * ct, -r * st, 0.0]),
                np.array([r * st, -r * ct, 0.0]))

    return Curve3(fn, domain, f"circle(r={r:g})", closed)


def line(p=(0.0, 0.0, 0.0), v=(1.0, 0.0, 0.0), domain=(0.0, 1.0)) -> Curve3:
    """``p + t v``."""
    p = np.asarray(p, dtype=float).reshape(3)
    v = np.asarray(v, dtype=float).reshape(3)
    pl, vl = [float(x) for x in p], [float(x) for x in v]
    zero = np.zeros(3)

    def fn(s):
        return [pl[i] + s * vl[i] for i in range(3)]

    def closed(t):
        return (p + t * v, v.copy(), zero, zero)

    return Curve3(fn, domain, "line", closed)


@dataclass(frozen=True)
class Frame3:
    """Orthonormal right-handed frame."""

    first: np.ndarray
    second: np.ndarray
    third: np.ndarray

    def matrix(self) -> np.ndarray:
        """Frame vectors as matrix columns."""
        return np.column_stack([self.first, self.second, self.third])

    def orthonormality_error(self) -> float:
        m = self.matrix()
        return float(max(np.max(np.abs(m.T @ m - np.eye(3))), abs(np.linalg.det(m) - 1.0)))


def _check(value, tol: float, what: str):
    if not real_part(value) > tol:
        raise DegenerateCurveError(f"{what} = {real_part(value):.3e} is below tolerance {tol:g}")


def frenet_fields(d1, d2, tol: float = DEGENERATE_TOL) -> dict[str, list]:
    """Tangent, normal and binormal from the first two derivatives (any scalar kind)."""
    speed = gnorm(d1)
    _check(speed, tol, "|d1|")
    c12 = gcross(d1, d2)
    area = gnorm(c12)
    _check(area, tol, "|d1 x d2|")
    t = gscale(reciprocal(speed), d1)
    b = gscale(reciprocal(area), c12)
    n = gcross(b, t)
    return {"t": t, "n": n, "b": b}


def curvature_torsion(d1, d2, d3):
    """``(kappa, tau, speed)`` for any scalar kind."""
    speed = gnorm(d1)
    c12 = gcross(d1, d2)
    area2 = gdot(c12, c12)
    kappa = gnorm(c12) * reciprocal(speed * speed * speed)
    tau = gdot(c12, d3) * reciprocal(area2)
    return kappa, tau, speed


def frame_fields(d1, d2, d3, tol: float = DEGENERATE_TOL) -> dict[str, list]:
    """Frenet fields plus the adapted fields ``c = n'/|n'|`` and ``w = n x c``.

    ``n'`` comes from the Frenet-Serret relation
    ``n' = -kappa |d1| t + tau |d1| b``.
    """
    f = frenet_fields(d1, d2, tol)
    kappa, tau, speed = curvature_torsion(d1, d2, d3)
    dn = gadd(gscale(-kappa * speed, f["t"]), gscale(tau * speed, f["b"]))
    dn_norm = gnorm(dn)
    _check(dn_norm, tol, "|n'|")
    c = gscale(reciprocal(dn_norm), dn)
    f["c"] = c
    f["w"] = gcross(f["n"], c)
    f["dn"] = dn
    return f


def frenet_frame(c: Curve3, t: float, tol: float = DEGENERATE_TOL) -> Frame3:
    _, d1, d2 = c.jet(float(t), 2)
    f = frenet_fields(d1, d2, tol)
    return Frame3(_as_array(f["t"]), _as_array(f["n"]), _as_array(f["b"]))


def adapted_frame(c: Curve3, t: float, tol: float = DEGENERATE_TOL) -> Frame3:
    """Frame ``{n, c, w}`` with ``c = n'/|n'|`` and ``w = n x c``."""
    _, d1, d2, d3 = c.jet(float(t), 3)
    f = frame_fields(d1, d2, d3, tol)
    return Frame3(_as_array(f["n"]), _as_array(f["c"]), _as_array(f["w"]))


def frame_field_curve(c: Curve3, field: str, tol: float = DEGENERATE_TOL) -> Curve3:
    """Curve traced by one frame field (t, n, b, c or w) of ``c``."""
    if field not in FRAME_FIELDS:
        raise ValueError(f"unknown frame field {field!r}; choose from {', '.join(FRAME_FIELDS)}")
    if field in ("t", "n", "b"):
        def fn(s):
            _, d1, d2 = c.jet(s, 2)
            return frenet_fields(d1, d2, tol)[field]
    else:
        def fn(s):
            _, d1, d2, d3 = c.jet(s, 3)
            return frame_fields(d1, d2, d3, tol)[field]
    return Curve3(fn, c.domain, f"{field}[{c.name}]")


def derived_curve(fn: GenericFn, domain, name: str) -> Curve3:
    return Curve3(fn, domain, name)


def cross_curve(a: Curve3, b: Curve3, name: str | None = None) -> Curve3:
    """Pointwise ``a(t) x b(t)``."""
    return Curve3(lambda s: gcross(a.fn(s), b.fn(s)), a.domain,
                  name or f"({a.name} x {b.name})")


class HyperDualCurve:
    """Curve in hyper-dual vectors built from four real lanes ``a0..a3``."""

    def __init__(self, lanes: Sequence[Curve3], domain=None, name: str = "gamma"):
        if len(lanes) != 4:
            raise ValueError("a hyper-dual curve needs four lanes")
        self.lanes = tuple(lanes)
        self.domain = tuple(domain) if domain is not None else self.lanes[0].domain
        self.name = name

    def __repr__(self):
        return f"HyperDualCurve({self.name!r}, domain={self.domain})"

    def __call__(self, t: float) -> HyperDualVec3:
        return HyperDualVec3(*(lane(t) for lane in self.lanes))

    def sample_params(self, n: int) -> np.ndarray:
        return np.linspace(self.domain[0], self.domain[1], n)


def parse_lane_pattern(pattern: str | Sequence[str]) -> list[str]:
    names = [p.strip() for p in pattern.split(",")] if isinstance(pattern, str) else list(pattern)
    if len(names) != 4:
        raise ValueError(f"lane pattern needs four frame fields, got {len(names)}")
    for n in names:
        if n not in FRAME_FIELDS:
            raise ValueError(f"unknown frame field {n!r}; choose from {', '.join(FRAME_FIELDS)}")
    return names


def curve_from_frame_lanes(c: Curve3, pattern: str | Sequence[str] = "t,n,b,n",
                           tol: float = DEGENERATE_TOL) -> HyperDualCurve:
    """Hyper-dual curve whose lanes are frame fields of ``c`` (e.g. "n,c,w,c")."""
    names = parse_lane_pattern(pattern)
    cache: dict[str, Curve3] = {}
    lanes = []
    for n in names:
        if n not in cache:
            cache[n] = frame_field_curve(c, n, tol)
        lanes.append(cache[n])
    return HyperDualCurve(lanes, c.domain, f"({','.join(names)})[{c.name}]")


def derivative_lanes(G: HyperDualCurve, t: float) -> HyperDualVec3:
    """``(a0', a1', a2', a3')`` at ``t``."""
    return HyperDualVec3(*(lane.derivatives(t, 1)[1] for lane in G.lanes))


GL_DEGREE = 5


def hd_arc_length(G: HyperDualCurve, t: float, quad_n: int = 64,
                  t0: float = 0.0) -> HyperDual:
    """Hyper-dual arc length ``int_{t0}^{t} |G'(s)| ds``.

    Composite Gauss-Legendre: ``quad_n`` equal panels with a 5-point rule
    each.  The integrand is the hyper-dual norm of the derivative lanes.
    """
    if quad_n < 1:
        raise ValueError("quad_n must be positive")
    t, t0 = float(t), float(t0)
    if t == t0:
        return HyperDual(0.0, 0.0, 0.0, 0.0)
    nodes, weights = np.polynomial.legendre.leggauss(GL_DEGREE)
    edges = np.linspace(t0, t, quad_n + 1)
    acc = np.zeros(4)
    for lo, hi in zip(edges[:-1], edges[1:]):
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        for x, wt in zip(nodes, weights):
            s = mid + half * x
            try:
                n = hd_norm(derivative_lanes(G, s))
            except DomainError as exc:
                raise DegenerateCurveError(f"|a0'| vanishes at t={s:.17g}") from exc
            acc += wt * half * np.array(tuple(n), dtype=float)
    return HyperDual(*(float(v) for v in acc))
