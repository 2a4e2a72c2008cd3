"""Line/dual-vector correspondence and the constructions that turn curves on
the hyper-dual sphere into ruled surfaces (and back).

Notation: a hyper-dual curve has lanes ``a0..a3``; ``A = a0 + ε a1`` and
``A* = a2 + ε a3`` are its two dual-vector halves.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from .curves import Curve3, HyperDualCurve, derivative_lanes
from .scalars import Dual
from .vectors import (DEFAULT_TOL, DualVec3, dual_cross, dual_det, dual_inner,
                      gadd, gcross, gdot, gscale, gsub, on_hyperdual_sphere,
                      on_unit_dual_sphere, on_unit_hyperdual_sphere, vec3)

log = logging.getLogger(__name__)

DEFAULT_SAMPLES = 200


class MembershipError(ValueError):
    """Input is not on the required sphere."""


class BaseMismatchError(ValueError):
    """The two surfaces of a pair do not share their base curve."""


class PreconditionError(ValueError):
    """Rulings are not unit or not perpendicular at some parameter."""

    def __init__(self, message: str, t: float):
        self.t = t
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Line3:
    """Oriented line as a Plücker pair (unit direction, moment)."""

    direction: np.ndarray
    moment: np.ndarray

    def __post_init__(self):
        d, m = vec3(self.direction), vec3(self.moment)
        if abs(np.linalg.norm(d) - 1.0) > DEFAULT_TOL:
            raise ValueError(f"line direction must be unit, |d| = {np.linalg.norm(d)!r}")
        if abs(d @ m) > DEFAULT_TOL:
            raise ValueError(f"Plücker condition violated: d.m = {d @ m!r}")
        object.__setattr__(self, "direction", d)
        object.__setattr__(self, "moment", m)

    @classmethod
    def through(cls, point, direction) -> "Line3":
        """Line through ``point``; ``direction`` is normalized."""
        d = vec3(direction)
        d = d / np.linalg.norm(d)
        return cls(d, np.cross(vec3(point), d))

    @property
    def closest_point(self) -> np.ndarray:
        """Foot of the perpendicular from the origin."""
        return np.cross(self.direction, self.moment)


def line_to_dual(L: Line3) -> DualVec3:
    return DualVec3(L.direction.copy(), L.moment.copy())


def dual_to_line(A: DualVec3, tol: float = DEFAULT_TOL) -> Line3:
    m = on_unit_dual_sphere(A, tol)
    if not m:
        raise MembershipError(f"not a unit dual vector: {', '.join(m.failed)}")
    return Line3(A.a, A.a_star)


class RuledSurface3:
    """``phi(t, u) = base(t) + u director(t)``."""

    def __init__(self, base: Curve3, director: Curve3, name: str = "surface"):
        self.base = base
        self.director = director
        self.name = name

    @property
    def domain(self):
        return self.base.domain

    def __call__(self, t: float, u: float) -> np.ndarray:
        return self.base(t) + u * self.director(t)

    def __repr__(self):
        return f"RuledSurface3({self.name!r})"


@dataclass
class Congruence:
    """Two-parameter line family ``base(t) + u director_u(t) + u* director_ustar(t)``."""

    base: Curve3
    director_u: Curve3
    director_ustar: Curve3

    def __call__(self, t: float, u: float, ustar: float) -> np.ndarray:
        return self.base(t) + u * self.director_u(t) + ustar * self.director_ustar(t)


class DualRuledSurface:
    """``Phi(t, U) = B(t) + U B*(t)`` with dual-vector base and director.

    Built from a hyper-dual curve: ``B = A x A*`` and ``B* = A``.
    """

    def __init__(self, gamma: HyperDualCurve):
        self.gamma = gamma

    def base(self, t: float) -> DualVec3:
        g = self.gamma(t)
        return dual_cross(g.A, g.A_star)

    def director(self, t: float) -> DualVec3:
        return self.gamma(t).A

    def __call__(self, t: float, U: Dual) -> DualVec3:
        return self.base(t) + self.director(t).scale(U)


def _check_sphere(G: HyperDualCurve, predicate, samples: int, tol: float):
    worst = None
    for t in G.sample_params(samples):
        m = predicate(G(t), tol)
        if not m and (worst is None or m.max_violation > worst[1].max_violation):
            worst = (t, m)
    return worst


def ruled_from_gamma(G: HyperDualCurve, samples: int = 20,
                     tol: float = DEFAULT_TOL) -> DualRuledSurface:
    """Dual ruled surface ``A x A* + U A``.

    Off-sphere input only logs a warning; the construction is total.
    """
    worst = _check_sphere(G, on_hyperdual_sphere, samples, tol)
    if worst is not None:
        log.warning("%s is off the hyper-dual sphere at t=%.6g (%s)", G.name, worst[0],
                    ", ".join(worst[1].failed))
    return DualRuledSurface(G)


def _lane_fns(G: HyperDualCurve):
    return tuple(lane.fn for lane in G.lanes)


def decompose(G: HyperDualCurve | DualRuledSurface) -> tuple[RuledSurface3, Congruence]:
    """Split ``A x A* + (u + ε u*) A`` into its real and ε parts.

    Real part: ``a0 x a2 + u a0``.  ε part: congruence with base
    ``a1 x a2 + a0 x a3`` and directors ``a1`` (for u) and ``a0`` (for u*).
    """
    if isinstance(G, DualRuledSurface):
        G = G.gamma
    f0, f1, f2, f3 = _lane_fns(G)
    a0, a1 = G.lanes[0], G.lanes[1]
    base_I = Curve3(lambda s: gcross(f0(s), f2(s)), G.domain, "a0 x a2")
    K = Curve3(lambda s: gadd(gcross(f1(s), f2(s)), gcross(f0(s), f3(s))), G.domain,
               "a1 x a2 + a0 x a3")
    return RuledSurface3(base_I, a0, "I"), Congruence(K, a1, a0)


@dataclass
class DevelopabilityResidual:
    residual: float
    tol: float

    def __bool__(self) -> bool:
        return abs(self.residual) <= self.tol


def is_developable_r3(S: RuledSurface3, t: float, tol: float = DEFAULT_TOL) -> DevelopabilityResidual:
    """``det(base'(t), director(t), director'(t))`` against ``tol``."""
    _, db = S.base.derivatives(t, 1)
    a, da = S.director.derivatives(t, 1)
    return DevelopabilityResidual(float(np.linalg.det(np.column_stack([db, a, da]))), tol)


@dataclass
class DualDevelopability:
    """Residuals ``a0'.a2'`` and ``a0'.a3' + a1'.a2'``."""

    real: float
    dual: float
    tol: float

    def __bool__(self) -> bool:
        return abs(self.real) <= self.tol and abs(self.dual) <= self.tol


def is_developable_dual(G: HyperDualCurve, t: float, tol: float = DEFAULT_TOL) -> DualDevelopability:
    d0, d1, d2, d3 = derivative_lanes(G, t).lanes
    return DualDevelopability(float(d0 @ d2), float(d0 @ d3 + d1 @ d2), tol)


@dataclass
class DetIdentityResidual:
    """``det((A x A*)', A', A) ± <A', A*'>`` as dual numbers."""

    plus: Dual
    minus: Dual
    det: Dual
    inner: Dual

    @staticmethod
    def _size(d: Dual) -> float:
        return max(abs(d.re), abs(d.du))

    @property
    def plus_size(self) -> float:
        return self._size(self.plus)

    @property
    def minus_size(self) -> float:
        return self._size(self.minus)


def dual_det_identity_residual(G: HyperDualCurve, t: float) -> DetIdentityResidual:
    g = G(t)
    dg = derivative_lanes(G, t)
    A, As, dA, dAs = g.A, g.A_star, dg.A, dg.A_star
    d_cross = dual_cross(dA, As) + dual_cross(A, dAs)
    det = dual_det(d_cross, dA, A)
    inner = dual_inner(dA, dAs)
    return DetIdentityResidual(det + inner, det - inner, det, inner)


class SurfacePair:
    """Two ruled surfaces with common base ``k`` and perpendicular rulings."""

    def __init__(self, phi1: RuledSurface3, phi2: RuledSurface3, base_k: Curve3,
                 f: Callable[[Any], Any], g: Callable[[Any], Any], max_base_gap: float):
        self.phi1 = phi1
        self.phi2 = phi2
        self.base_k = base_k
        self.f = f
        self.g = g
        self.max_base_gap = max_base_gap


def pair_from_unit_gamma(G: HyperDualCurve, samples: int = DEFAULT_SAMPLES,
                         tol: float = DEFAULT_TOL) -> SurfacePair:
    """Pair ``k + u a0`` and ``k + v a2`` for a curve on the unit hyper-dual sphere.

    ``k = a0 x a1 + f a0 = a2 x a3 + g a2`` with ``f = (a2 x a3).a0`` and
    ``g = (a0 x a1).a2``.  The equality of both expressions for ``k`` is
    checked at ``samples`` parameters rather than assumed.
    """
    worst = _check_sphere(G, on_unit_hyperdual_sphere, samples, tol)
    if worst is not None:
        raise MembershipError(f"{G.name} is off the unit hyper-dual sphere at t={worst[0]:.17g}: "
                              + ", ".join(worst[1].failed))
    f0, f1, f2, f3 = _lane_fns(G)

    def f(s):
        return gdot(gcross(f2(s), f3(s)), f0(s))

    def g(s):
        return gdot(gcross(f0(s), f1(s)), f2(s))

    k1 = Curve3(lambda s: gadd(gcross(f0(s), f1(s)), gscale(f(s), f0(s))), G.domain,
                "a0 x a1 + f a0")
    k2 = Curve3(lambda s: gadd(gcross(f2(s), f3(s)), gscale(g(s), f2(s))), G.domain,
                "a2 x a3 + g a2")
    gap = max(float(np.max(np.abs(k1(t) - k2(t)))) for t in G.sample_params(samples))
    if gap > tol:
        raise BaseMismatchError(f"base curves differ by {gap:.3e} > {tol:g}")
    return SurfacePair(RuledSurface3(k1, G.lanes[0], "phi1"),
                       RuledSurface3(k2, G.lanes[2], "phi2"), k1, f, g, gap)


def _zero(s):
    return 0.0


@dataclass
class Couple:
    """Result of :func:`build_couple`.

    ``first`` is ``I_bar``; ``congruence`` has base ``K + g a1`` with
    directors ``a1`` (for u) and ``a0`` (for u*).
    """

    first: RuledSurface3
    congruence: Congruence
    f: Callable[[Any], Any]
    g: Callable[[Any], Any]
    u_star: Callable[[Any], Any]

    def __iter__(self):
        return iter((self.first, self.congruence))

    def second_surface(self) -> RuledSurface3:
        """``II_bar`` with u* fixed to the stored function of t."""
        fb, fd, u_star = self.congruence.base.fn, self.congruence.director_ustar.fn, self.u_star
        base = Curve3(lambda s: gadd(fb(s), gscale(u_star(s), fd(s))),
                      self.congruence.base.domain, "K + g a1 + u* a0")
        return RuledSurface3(base, self.congruence.director_u, "II_bar")


def build_couple(G: HyperDualCurve, u_star: Callable[[Any], Any] = _zero) -> Couple:
    """The couple ``I_bar``, ``II_bar`` for a chosen function ``u*(t)``.

    ``I_bar = a0 x a2 + f a0 + u a0`` with ``f = <a1 x a2, a0> + u*``;
    ``II_bar = (a1 x a2 + a0 x a3) + u a1 + g a1 + u*(t) a0`` with
    ``g = <a0 x (a2 - a3), a1>``.  Nothing is claimed about a shared base.
    """
    f0, f1, f2, f3 = _lane_fns(G)

    def f(s):
        return gdot(gcross(f1(s), f2(s)), f0(s)) + u_star(s)

    def g(s):
        return gdot(gcross(f0(s), gsub(f2(s), f3(s))), f1(s))

    base_I = Curve3(lambda s: gadd(gcross(f0(s), f2(s)), gscale(f(s), f0(s))), G.domain,
                    "a0 x a2 + f a0")
    base_II = Curve3(lambda s: gadd(gadd(gcross(f1(s), f2(s)), gcross(f0(s), f3(s))),
                                    gscale(g(s), f1(s))), G.domain, "K + g a1")
    return Couple(RuledSurface3(base_I, G.lanes[0], "I_bar"),
                  Congruence(base_II, G.lanes[1], G.lanes[0]), f, g, u_star)


def inverse_pair(K: Curve3, a: Curve3, a_star: Curve3, samples: int = DEFAULT_SAMPLES,
                 tol: float = DEFAULT_TOL) -> tuple[HyperDualCurve, HyperDualCurve]:
    """Hyper-dual curves for two ruled surfaces ``K + u a`` and ``K + v a*``.

    ``A = a + ε (K x a)``, ``A* = a* + ε (K x a*)``; returns
    ``(A, A*)`` and ``(A*, A)`` as lane quadruples.
    """
    for t in K.sample_params(samples):
        x, y = a(t), a_star(t)
        problems = []
        if abs(np.linalg.norm(x) - 1.0) > tol:
            problems.append(f"|a| = {np.linalg.norm(x):.17g}")
        if abs(np.linalg.norm(y) - 1.0) > tol:
            problems.append(f"|a*| = {np.linalg.norm(y):.17g}")
        if abs(x @ y) > tol:
            problems.append(f"a.a* = {x @ y:.3e}")
        if problems:
            raise PreconditionError(f"rulings fail at t={t:.17g}: " + ", ".join(problems), float(t))
    fk = K.fn
    m = Curve3(lambda s: gcross(fk(s), a.fn(s)), K.domain, f"K x {a.name}")
    m_star = Curve3(lambda s: gcross(fk(s), a_star.fn(s)), K.domain, f"K x {a_star.name}")
    g1 = HyperDualCurve((a, m, a_star, m_star), K.domain, "gamma1")
    g2 = HyperDualCurve((a_star, m_star, a, m), K.domain, "gamma2")
    return g1, g2


def helix_reference_dual_vectors(t: float, r: float = 1.0, c: float = 1.0) -> tuple[DualVec3, DualVec3]:
    """Reference closed forms of ``A`` and ``A*`` for the helix ``K``, rulings ``t_K``, ``n_K``.

    ``A*`` agrees with :func:`inverse_pair`; ``A`` carries a ``1/(r²+c²)``
    prefactor and a flipped second moment component, kept to measure the gap.
    """
    st, ct = math.sin(t), math.cos(t)
    k = 1.0 / (r * r + c * c)
    A = DualVec3(k * np.array([-r * st, r * ct, c]),
                 k * np.array([c * r * (st - t * ct), c * r * (ct + t * st), r * r]))
    A_star = DualVec3(np.array([-ct, -st, 0.0]), c * t * np.array([st, -ct, 0.0]))
    return A, A_star
