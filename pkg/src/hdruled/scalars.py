"""Dual and hyper-dual scalars with elementary-function lifting.

A hyper-dual number is stored in the flat basis (1, ε, ε*, εε*) with
ε² = ε*² = 0.  Components may themselves be dual or hyper-dual numbers,
which is how higher derivatives are obtained (see :func:`jet`).

All values are immutable; every function here is pure.
"""
from __future__ import annotations

import math
from typing import Any, Callable, NamedTuple, Sequence


class DomainError(ValueError):
    """Raised when a function is evaluated outside its real domain."""


def real_part(x: Any) -> float:
    """Innermost real component of a (possibly nested) scalar."""
    while isinstance(x, (Dual, HyperDual)):
        x = x.re if isinstance(x, Dual) else x.w
    return float(x)


class Dual:
    """Dual number ``re + ε du`` with ε² = 0."""

    __slots__ = ("re", "du")

    def __init__(self, re: Any, du: Any = 0.0):
        self.re = re
        self.du = du

    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.re + other.re, self.du + other.du)
        return Dual(self.re + other, self.du)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.re - other.re, self.du - other.du)
        return Dual(self.re - other, self.du)

    def __rsub__(self, other):
        return Dual(other - self.re, -self.du)

    def __neg__(self):
        return Dual(-self.re, -self.du)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Dual):
            return Dual(self.re * other.re, self.re * other.du + self.du * other.re)
        return Dual(self.re * other, self.du * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * reciprocal(other)

    def __rtruediv__(self, other):
        return other * reciprocal(self)

    def __pow__(self, k):
        return power(self, k)

    def lift(self, f: "Smooth") -> "Dual":
        return Dual(f.f(self.re), self.du * f.fp(self.re))

    def __eq__(self, other):
        if isinstance(other, Dual):
            return self.re == other.re and self.du == other.du
        return NotImplemented

    def __hash__(self):
        return hash((Dual, self.re, self.du))

    def __iter__(self):
        return iter((self.re, self.du))

    def __repr__(self):
        return f"Dual({self.re!r}, {self.du!r})"


class HyperDual:
    """Hyper-dual number ``w + ε e1 + ε* e2 + εε* e12``."""

    __slots__ = ("w", "e1", "e2", "e12")

    def __init__(self, w: Any, e1: Any = 0.0, e2: Any = 0.0, e12: Any = 0.0):
        self.w = w
        self.e1 = e1
        self.e2 = e2
        self.e12 = e12

    def __add__(self, other):
        if isinstance(other, HyperDual):
            return HyperDual(self.w + other.w, self.e1 + other.e1,
                             self.e2 + other.e2, self.e12 + other.e12)
        return HyperDual(self.w + other, self.e1, self.e2, self.e12)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, HyperDual):
            return HyperDual(self.w - other.w, self.e1 - other.e1,
                             self.e2 - other.e2, self.e12 - other.e12)
        return HyperDual(self.w - other, self.e1, self.e2, self.e12)

    def __rsub__(self, other):
        return HyperDual(other - self.w, -self.e1, -self.e2, -self.e12)

    def __neg__(self):
        return HyperDual(-self.w, -self.e1, -self.e2, -self.e12)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, HyperDual):
            a0, a1, a2, a3 = self.w, self.e1, self.e2, self.e12
            b0, b1, b2, b3 = other.w, other.e1, other.e2, other.e12
            return HyperDual(
                a0 * b0,
                a0 * b1 + a1 * b0,
                a0 * b2 + a2 * b0,
                a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            )
        return HyperDual(self.w * other, self.e1 * other, self.e2 * other, self.e12 * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * reciprocal(other)

    def __rtruediv__(self, other):
        return other * reciprocal(self)

    def __pow__(self, k):
        return power(self, k)

    def lift(self, f: "Smooth") -> "HyperDual":
        x0 = self.w
        d1 = f.fp(x0)
        return HyperDual(
            f.f(x0),
            self.e1 * d1,
            self.e2 * d1,
            self.e12 * d1 + self.e1 * self.e2 * f.fpp(x0),
        )

    def __eq__(self, other):
        if isinstance(other, HyperDual):
            return tuple(self) == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash((HyperDual, *self))

    def __iter__(self):
        return iter((self.w, self.e1, self.e2, self.e12))

    def __repr__(self):
        return f"HyperDual({self.w!r}, {self.e1!r}, {self.e2!r}, {self.e12!r})"


# Alternative names.
DualScalar = Dual
HyperDualScalar = HyperDual

EPS = HyperDual(0.0, 1.0, 0.0, 0.0)
EPS_STAR = HyperDual(0.0, 0.0, 1.0, 0.0)


class Smooth(NamedTuple):
    """A real function together with its first two derivatives.

    Each callable must accept any scalar kind, so that lifting composes
    through nested numbers.
    """

    name: str
    f: Callable[[Any], Any]
    fp: Callable[[Any], Any]
    fpp: Callable[[Any], Any]


def lift(f: Smooth, x: Any) -> Any:
    """Apply ``f`` to a real, dual or hyper-dual scalar.

    For hyper-dual ``x`` the result is the Taylor expansion truncated by
    nilpotency: ``(f(w), e1 f'(w), e2 f'(w), e12 f'(w) + e1 e2 f''(w))``.
    """
    if isinstance(x, (Dual, HyperDual)):
        return x.lift(f)
    return f.f(x)


def _real_sin(x):
    return math.sin(x)


def _real_cos(x):
    return math.cos(x)


def _real_tan(x):
    return math.tan(x)


def _real_exp(x):
    try:
        return math.exp(x)
    except OverflowError as exc:
        raise DomainError(f"exp overflow at {x!r}") from exc


def _real_log(x):
    if x <= 0.0:
        raise DomainError(f"log of non-positive value {x!r}")
    return math.log(x)


def _real_recip(x):
    if x == 0.0:
        raise DomainError("division by zero")
    return 1.0 / x


def sin(x):
    if isinstance(x, (Dual, HyperDual)):
        return x.lift(SIN)
    return _real_sin(x)


def cos(x):
    if isinstance(x, (Dual, HyperDual)):
        return x.lift(COS)
    return _real_cos(x)


def tan(x):
    if isinstance(x, (Dual, HyperDual)):
        return x.lift(TAN)
    return _real_tan(x)


def exp(x):
    if isinstance(x, (Dual, HyperDual)):
        return x.lift(EXP)
    return _real_exp(x)


def log(x):
    if isinstance(x, (Dual, HyperDual)):
        if real_part(x) <= 0.0:
            raise DomainError(f"log of non-positive value {real_part(x)!r}")
        return x.lift(LOG)
    return _real_log(x)


def sqrt(x):
    """Square root; infinitesimal arguments need a strictly positive real part."""
    if isinstance(x, (Dual, HyperDual)):
        if real_part(x) <= 0.0:
            raise DomainError(f"sqrt needs a positive real part, got {real_part(x)!r}")
        return x.lift(SQRT)
    if x < 0.0:
        raise DomainError(f"sqrt of negative value {x!r}")
    return math.sqrt(x)


def reciprocal(x):
    """``1/x`` for any scalar kind; requires a non-zero real part."""
    if isinstance(x, (Dual, HyperDual)):
        if real_part(x) == 0.0:
            raise DomainError("division by a number with zero real part")
        return x.lift(RECIP)
    return _real_recip(x)


def _real_pow(x, k):
    if x == 0.0 and k < 0:
        raise DomainError(f"0 raised to negative power {k!r}")
    if x < 0.0 and not float(k).is_integer():
        raise DomainError(f"negative base {x!r} with non-integer exponent {k!r}")
    try:
        return x ** k
    except OverflowError as exc:
        raise DomainError(f"pow overflow at {x!r}**{k!r}") from exc


def _pow_smooth(k: float) -> Smooth:
    def f(y):
        return power(y, k)

    def fp(y):
        return 0.0 if k == 0 else k * power(y, k - 1)

    def fpp(y):
        c = k * (k - 1)
        return 0.0 if c == 0 else c * power(y, k - 2)

    return Smooth(f"pow{k}", f, fp, fpp)


def power(x, k: float):
    """``x**k`` for a real constant exponent ``k``."""
    if isinstance(k, (Dual, HyperDual)):
        raise TypeError("exponent must be a real constant")
    if isinstance(x, (Dual, HyperDual)):
        if k == 0:
            return 1.0
        if k == 1:
            return x
        if k == 2:
            return x * x
        r = real_part(x)
        if r == 0.0 and (k < 2 or not float(k).is_integer()):
            raise DomainError(f"pow({k!r}) not differentiable at 0")
        if r < 0.0 and not float(k).is_integer():
            raise DomainError(f"negative base {r!r} with non-integer exponent {k!r}")
        return x.lift(_pow_smooth(k))
    return _real_pow(x, k)


SIN = Smooth("sin", sin, cos, lambda y: -sin(y))
COS = Smooth("cos", cos, lambda y: -sin(y), lambda y: -cos(y))


def _tan_p(y):
    s = tan(y)
    return 1.0 + s * s


def _tan_pp(y):
    s = tan(y)
    return 2.0 * s * (1.0 + s * s)


TAN = Smooth("tan", tan, _tan_p, _tan_pp)
EXP = Smooth("exp", exp, exp, exp)
LOG = Smooth("log", log, reciprocal, lambda y: -reciprocal(y * y))
SQRT = Smooth(
    "sqrt",
    sqrt,
    lambda y: 0.5 * reciprocal(sqrt(y)),
    lambda y: -0.25 * reciprocal(y * sqrt(y)),
)
RECIP = Smooth(
    "recip",
    reciprocal,
    lambda y: -reciprocal(y * y),
    lambda y: 2.0 * reciprocal(y * y * y),
)

FUNCTIONS: dict[str, Callable[[Any], Any]] = {
    "sin": sin,
    "cos": cos,
    "tan": tan,
    "exp": exp,
    "log": log,
    "sqrt": sqrt,
}


def hd_add(x: HyperDual, y: HyperDual) -> HyperDual:
    return x + y


def hd_mul(x: HyperDual, y: HyperDual) -> HyperDual:
    return x * y


def hd_sqrt(x: HyperDual) -> HyperDual:
    """Principal square root; ``x.w`` must be positive."""
    return sqrt(x)


def hd_lift(f: Smooth, x: HyperDual) -> HyperDual:
    return lift(f, x)


def dual_add(x: Dual, y: Dual) -> Dual:
    return x + y


def dual_mul(x: Dual, y: Dual) -> Dual:
    return x * y


def dual_sqrt(x: Dual) -> Dual:
    return sqrt(x)


def derivatives_of(f: Callable[[Any], Any], t: float) -> tuple[float, float, float]:
    """Return ``(f(t), f'(t), f''(t))`` from one hyper-dual evaluation at t+ε+ε*."""
    y = f(HyperDual(float(t), 1.0, 1.0, 0.0))
    if not isinstance(y, HyperDual):
        return float(y), 0.0, 0.0
    return float(y.w), float(y.e1), float(y.e12)


def _seed_levels(order: int) -> list[type]:
    return [HyperDual] * (order // 2) + [Dual] * (order % 2)


def _seed(x, levels):
    for cls in reversed(levels):
        x = HyperDual(x, 1.0, 1.0, 0.0) if cls is HyperDual else Dual(x, 1.0)
    return x


def _extract(y, levels, k):
    for cls in levels:
        if not isinstance(y, cls):
            return y if k == 0 else 0.0
        if cls is HyperDual:
            y = y.w if k == 0 else (y.e1 if k == 1 else y.e12)
            k -= min(k, 2)
        else:
            y = y.re if k == 0 else y.du
            k -= min(k, 1)
    return y if k == 0 else 0.0


def jet(fn: Callable[[Any], Any], t: Any, order: int) -> list[Any]:
    """Derivatives ``[fn(t), fn'(t), ..., fn^(order)(t)]`` by nested seeding.

    ``t`` may be real or itself a dual/hyper-dual number; the returned
    entries have the same kind as ``t``.  ``fn`` may return a scalar or a
    sequence of scalars (returned entries are then lists).  Every new
    infinitesimal is seeded against the same variable, so the coefficient of
    any product of k distinct infinitesimals is the k-th derivative.

    ``fn`` must not close over perturbed values from an enclosing ``jet``.
    """
    levels = _seed_levels(order)
    y = fn(_seed(t, levels))
    if isinstance(y, (list, tuple)):
        return [[_extract(c, levels, k) for c in y] for k in range(order + 1)]
    return [_extract(y, levels, k) for k in range(order + 1)]


def derivatives(fn: Callable[[Any], Any], t: float, order: int = 2) -> list[float]:
    """Real derivatives of a scalar function up to ``order``."""
    return [real_part(v) for v in jet(fn, float(t), order)]


def components(x: Any) -> Sequence[float]:
    """Flat tuple of the four components of a hyper-dual (or a promoted real)."""
    if isinstance(x, HyperDual):
        return tuple(x)
    if isinstance(x, Dual):
        return (x.re, x.du, 0.0, 0.0)
    return (x, 0.0, 0.0, 0.0)
