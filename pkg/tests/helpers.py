"""Shared generators and independent oracles for the test suite."""
from __future__ import annotations

import math
import random

import mpmath
import numpy as np
import sympy as sp

from hdruled import scalars as S
from hdruled.curves import Curve3, HyperDualCurve
from hdruled.scalars import HyperDual
from hdruled.vectors import HyperDualVec3, gadd, gscale


def random_hd(rng: random.Random, lo: float = -10.0, hi: float = 10.0) -> HyperDual:
    return HyperDual(*(rng.uniform(lo, hi) for _ in range(4)))


def gram_schmidt(rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Random right-handed orthonormal triple by Gram-Schmidt."""
    while True:
        x, y = rng.normal(size=3), rng.normal(size=3)
        if np.linalg.norm(np.cross(x, y)) > 1e-3:
            break
    u1 = x / np.linalg.norm(x)
    y = y - (y @ u1) * u1
    u2 = y / np.linalg.norm(y)
    return u1, u2, np.cross(u1, u2)


def on_sphere_point(rng: np.random.Generator, unit: bool = True) -> HyperDualVec3:
    """A point on the (unit) hyper-dual sphere built from an orthonormal triple.

    a0 = u1, a2 = s u2, a1 = p u2 + q u3, a3 = -p s u1 + x u2 + y u3,
    with s = 1 and x = 0 on the unit sphere.
    """
    u1, u2, u3 = gram_schmidt(rng)
    p, q, x, y = rng.uniform(-3, 3, size=4)
    s = 1.0 if unit else rng.uniform(-3, 3)
    if unit:
        x = 0.0
    return HyperDualVec3(u1, p * u2 + q * u3, s * u2, -p * s * u1 + x * u2 + y * u3)


def _trig(rng: random.Random):
    a, w, ph = rng.uniform(0.2, 1.5), rng.uniform(0.3, 2.0), rng.uniform(0, 2 * math.pi)
    c0 = rng.uniform(-1, 1)
    return lambda s: c0 + a * S.sin(w * s + ph)


def _rotation_columns(al, be, ga):
    """Columns of Rz(al) Ry(be) Rx(ga), generic over scalar kinds."""
    ca, sa, cb, sb, cg, sg = S.cos(al), S.sin(al), S.cos(be), S.sin(be), S.cos(ga), S.sin(ga)
    c1 = [ca * cb, sa * cb, -sb]
    c2 = [ca * sb * sg - sa * cg, sa * sb * sg + ca * cg, cb * sg]
    c3 = [ca * sb * cg + sa * sg, sa * sb * cg - ca * sg, cb * cg]
    return c1, c2, c3


def random_sphere_curve(rng: random.Random, unit: bool = True,
                        domain=(0.0, 2 * math.pi)) -> HyperDualCurve:
    """Smooth random curve on the (unit) hyper-dual sphere; lanes are Curve3s."""
    al, be, ga = _trig(rng), _trig(rng), _trig(rng)
    p, q, y = _trig(rng), _trig(rng), _trig(rng)
    sig = (lambda s: 1.0) if unit else _trig(rng)
    x = (lambda s: 0.0) if unit else _trig(rng)

    def cols(s):
        return _rotation_columns(al(s), be(s), ga(s))

    def a0(s):
        return cols(s)[0]

    def a1(s):
        _, u2, u3 = cols(s)
        return gadd(gscale(p(s), u2), gscale(q(s), u3))

    def a2(s):
        return gscale(sig(s), cols(s)[1])

    def a3(s):
        u1, u2, u3 = cols(s)
        return gadd(gadd(gscale(-(p(s) * sig(s)), u1), gscale(x(s), u2)), gscale(y(s), u3))

    lanes = [Curve3(f, domain, f"a{k}") for k, f in enumerate((a0, a1, a2, a3))]
    return HyperDualCurve(lanes, domain, "random")


# Random expressions: source text for the DSL and the matching sympy tree.

T = sp.Symbol("t", real=True)
_UNARY = ["sin", "cos", "exp", "log", "sqrt", "tan"]


def random_expression(rng: random.Random, depth: int = 3) -> tuple[str, sp.Expr]:
    if depth == 0 or rng.random() < 0.25:
        choice = rng.random()
        if choice < 0.55:
            return "t", T
        if choice < 0.65:
            return "pi", sp.pi
        v = rng.randint(1, 9) if rng.random() < 0.5 else round(rng.uniform(0.1, 5), 2)
        return str(v), sp.nsimplify(v)
    kind = rng.random()
    if kind < 0.45:
        op = rng.choice("+-*/")
        ls, le = random_expression(rng, depth - 1)
        rs, re = random_expression(rng, depth - 1)
        sym = {"+": le + re, "-": le - re, "*": le * re, "/": le / re}[op]
        return f"({ls} {op} {rs})", sym
    if kind < 0.85:
        fn = rng.choice(_UNARY)
        s, e = random_expression(rng, depth - 1)
        return f"{fn}({s})", getattr(sp, fn)(e)
    if kind < 0.93:
        k = rng.choice([2, 3])
        s, e = random_expression(rng, depth - 1)
        return f"({s})^{k}", e ** k
    s, e = random_expression(rng, depth - 1)
    return f"-({s})", -e


class SymbolicOracle:
    """Symbolic derivatives of one expression, evaluated in 30-digit precision.

    ``at(t)`` returns (f, f', f'') or None when any derivative up to order
    ``screen`` is non-real, non-finite or above 1e3.  Screening orders 3 and
    4 keeps central differences meaningful, since their truncation error
    grows with the third and fourth derivatives.
    """

    def __init__(self, e: sp.Expr, screen: int = 2):
        exprs = [e]
        for _ in range(max(2, screen)):
            exprs.append(sp.diff(exprs[-1], T))
        # a derivative that is complex-infinite or nan everywhere has no oracle
        if any(d.has(sp.zoo, sp.nan, sp.oo, -sp.oo) for d in exprs):
            self.fns = None
        else:
            # |x| terms differentiate into DiracDelta, which is 0 off the kink
            mods = [{"DiracDelta": lambda *a: 0}, "mpmath"]
            self.fns = [sp.lambdify(T, d, mods) for d in exprs]

    def at(self, t: float) -> tuple[float, float, float] | None:
        if self.fns is None:
            return None
        out = []
        with mpmath.workdps(30):
            for fn in self.fns:
                try:
                    v = complex(fn(mpmath.mpf(t)))
                except (TypeError, ValueError, ZeroDivisionError, OverflowError):
                    return None
                if v.imag != 0 or not math.isfinite(v.real) or abs(v.real) > 1e3:
                    return None
                out.append(v.real)
        return tuple(out[:3])


def central_fd(f, t: float, h1: float = 1e-5, h2: float = 1e-4) -> tuple[float, float]:
    d1 = (f(t + h1) - f(t - h1)) / (2 * h1)
    d2 = (f(t + h2) - 2 * f(t) + f(t - h2)) / (h2 * h2)
    return d1, d2


def fd_vector(c: Curve3, t: float, h: float = 1e-5) -> np.ndarray:
    return (c(t + h) - c(t - h)) / (2 * h)
