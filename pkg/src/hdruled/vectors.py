"""Dual and hyper-dual 3-vectors, their products and norms, and the sphere
and bundle membership predicates.

Real vectors are plain ``numpy`` arrays of shape (3,).  The ``g*`` helpers
at the bottom work on 3-sequences of arbitrary scalars (floats, duals,
hyper-duals) and are what the curve code uses under automatic
differentiation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .scalars import Dual, DomainError, HyperDual, hd_sqrt, sqrt

DEFAULT_TOL = 1e-9

E1 = np.array([1.0, 0.0, 0.0])
E2 = np.array([0.0, 1.0, 0.0])
E3 = np.array([0.0, 0.0, 1.0])
ZERO = np.zeros(3)


def vec3(v) -> np.ndarray:
    a = np.asarray(v, dtype=float).reshape(3)
    return a


@dataclass(frozen=True, eq=False)
class DualVec3:
    """Dual vector ``a + ε a_star``."""

    a: np.ndarray
    a_star: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", vec3(self.a))
        object.__setattr__(self, "a_star", vec3(self.a_star))

    def __add__(self, other: "DualVec3") -> "DualVec3":
        return DualVec3(self.a + other.a, self.a_star + other.a_star)

    def __sub__(self, other: "DualVec3") -> "DualVec3":
        return DualVec3(self.a - other.a, self.a_star - other.a_star)

    def scale(self, s: Dual) -> "DualVec3":
        """Multiply by a dual scalar ``s``."""
        if not isinstance(s, Dual):
            s = Dual(float(s), 0.0)
        return DualVec3(s.re * self.a, s.re * self.a_star + s.du * self.a)

    def allclose(self, other: "DualVec3", atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.a, other.a, rtol=0, atol=atol)
                    and np.allclose(self.a_star, other.a_star, rtol=0, atol=atol))


@dataclass(frozen=True, eq=False)
class HyperDualVec3:
    """Hyper-dual vector ``(a0 + ε a1) + ε*(a2 + ε a3)``."""

    a0: np.ndarray
    a1: np.ndarray
    a2: np.ndarray
    a3: np.ndarray

    def __post_init__(self):
        for name in ("a0", "a1", "a2", "a3"):
            object.__setattr__(self, name, vec3(getattr(self, name)))

    @property
    def lanes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        return (self.a0, self.a1, self.a2, self.a3)

    @property
    def A(self) -> DualVec3:
        return DualVec3(self.a0, self.a1)

    @property
    def A_star(self) -> DualVec3:
        return DualVec3(self.a2, self.a3)

    def __add__(self, other):
        return HyperDualVec3(*(x + y for x, y in zip(self.lanes, other.lanes)))

    def __sub__(self, other):
        return HyperDualVec3(*(x - y for x, y in zip(self.lanes, other.lanes)))

    def __neg__(self):
        return HyperDualVec3(*(-x for x in self.lanes))

    def as_array(self) -> np.ndarray:
        """Lanes stacked as a (4, 3) array."""
        return np.stack(self.lanes)

    def allclose(self, other: "HyperDualVec3", atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.as_array(), other.as_array(), rtol=0, atol=atol))


def dual_inner(A: DualVec3, B: DualVec3) -> Dual:
    return Dual(float(A.a @ B.a), float(A.a_star @ B.a + A.a @ B.a_star))


def dual_cross(A: DualVec3, B: DualVec3) -> DualVec3:
    return DualVec3(np.cross(A.a, B.a), np.cross(A.a, B.a_star) + np.cross(A.a_star, B.a))


def dual_det(A: DualVec3, B: DualVec3, C: DualVec3) -> Dual:
    """``det(A, B, C) = <A, B × C>`` over dual numbers."""
    return dual_inner(A, dual_cross(B, C))


def dual_norm(A: DualVec3) -> Dual:
    """``|a| + ε (a·a*)/|a|``; undefined when the real part vanishes."""
    n = float(np.linalg.norm(A.a))
    if n == 0.0:
        raise DomainError("dual norm needs a non-zero real part")
    return Dual(n, float(A.a @ A.a_star) / n)


def hd_inner(A: HyperDualVec3, B: HyperDualVec3) -> HyperDual:
    a0, a1, a2, a3 = A.lanes
    b0, b1, b2, b3 = B.lanes
    return HyperDual(
        float(a0 @ b0),
        float(a0 @ b1 + a1 @ b0),
        float(a0 @ b2 + a2 @ b0),
        float(a0 @ b3 + a1 @ b2 + a2 @ b1 + a3 @ b0),
    )


def hd_cross(A: HyperDualVec3, B: HyperDualVec3) -> HyperDualVec3:
    a0, a1, a2, a3 = A.lanes
    b0, b1, b2, b3 = B.lanes
    c = np.cross
    return HyperDualVec3(
        c(a0, b0),
        c(a0, b1) + c(a1, b0),
        c(a0, b2) + c(a2, b0),
        c(a0, b3) + c(a1, b2) + c(a2, b1) + c(a3, b0),
    )


def hd_norm(A: HyperDualVec3) -> HyperDual:
    """Norm as the hyper-dual square root of ``<A, A>``.

    Raises :class:`DomainError` when ``a0 = 0``.
    """
    if not np.any(A.a0):
        raise DomainError("hyper-dual norm needs a0 != 0")
    return hd_sqrt(hd_inner(A, A))


def hd_norm_reference(A: HyperDualVec3) -> HyperDual:
    """The closed form with the εε* term ``-(a0·a1 + a0·a2)/|a0|³``.

    Kept only to quantify its disagreement with :func:`hd_norm`.
    """
    a0, a1, a2, a3 = A.lanes
    n = float(np.linalg.norm(a0))
    return HyperDual(
        n,
        float(a0 @ a1) / n,
        float(a0 @ a2) / n,
        float(a0 @ a3) / n + float(a1 @ a2) / n - float(a0 @ a1 + a0 @ a2) / n**3,
    )


@dataclass
class Membership:
    """Outcome of a membership test: truthy iff every condition is within tol."""

    conditions: dict[str, float]
    tol: float
    failed: list[str] = field(init=False)

    def __post_init__(self):
        self.failed = [k for k, v in self.conditions.items() if not abs(v) <= self.tol]

    def __bool__(self) -> bool:
        return not self.failed

    @property
    def max_violation(self) -> float:
        return max((abs(v) for v in self.conditions.values()), default=0.0)


def on_unit_dual_sphere(A: DualVec3, tol: float = DEFAULT_TOL) -> Membership:
    return Membership({
        "|a|=1": float(np.linalg.norm(A.a)) - 1.0,
        "a.a*=0": float(A.a @ A.a_star),
    }, tol)


def on_hyperdual_sphere(A: HyperDualVec3, tol: float = DEFAULT_TOL) -> Membership:
    a0, a1, a2, a3 = A.lanes
    return Membership({
        "|a0|=1": float(np.linalg.norm(a0)) - 1.0,
        "a0.a1=0": float(a0 @ a1),
        "a0.a2=0": float(a0 @ a2),
        "a0.a3+a1.a2=0": float(a0 @ a3 + a1 @ a2),
    }, tol)


def on_unit_hyperdual_sphere(A: HyperDualVec3, tol: float = DEFAULT_TOL) -> Membership:
    m = on_hyperdual_sphere(A, tol)
    conditions = dict(m.conditions)
    conditions["|a2|=1"] = float(np.linalg.norm(A.a2)) - 1.0
    conditions["a2.a3=0"] = float(A.a2 @ A.a3)
    return Membership(conditions, tol)


def on_tangent_bundle(g, v, tol: float = DEFAULT_TOL) -> Membership:
    g, v = vec3(g), vec3(v)
    return Membership({"|g|=1": float(np.linalg.norm(g)) - 1.0, "g.v=0": float(g @ v)}, tol)


def on_unit_tangent_bundle(g, v, tol: float = DEFAULT_TOL) -> Membership:
    g, v = vec3(g), vec3(v)
    return Membership({
        "|g|=1": float(np.linalg.norm(g)) - 1.0,
        "|v|=1": float(np.linalg.norm(v)) - 1.0,
        "g.v=0": float(g @ v),
    }, tol)


# Generic 3-vectors over any scalar kind.

def gadd(a: Sequence[Any], b: Sequence[Any]) -> list:
    return [a[0] + b[0], a[1] + b[1], a[2] + b[2]]


def gsub(a: Sequence[Any], b: Sequence[Any]) -> list:
    return [a[0] - b[0], a[1] - b[1], a[2] - b[2]]


def gscale(s: Any, a: Sequence[Any]) -> list:
    return [s * a[0], s * a[1], s * a[2]]


def gdot(a: Sequence[Any], b: Sequence[Any]):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def gcross(a: Sequence[Any], b: Sequence[Any]) -> list:
    return [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]


def gnorm(a: Sequence[Any]):
    return sqrt(gdot(a, a))
