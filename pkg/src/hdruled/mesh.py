"""Grid sampling of ruled surfaces, OBJ/CSV writers and developability reports."""
from __future__ import annotations

import io
import os
from dataclasses import dataclass, field

import numpy as np

from .curves import Curve3, HyperDualCurve
from .study import RuledSurface3, is_developable_r3
from .vectors import DEFAULT_TOL


class MeshEvaluationError(RuntimeError):
    def __init__(self, i: int, j: int, cause: Exception):
        self.i, self.j = i, j
        super().__init__(f"surface evaluation failed at grid ({i}, {j}): {cause}")


@dataclass
class MeshGrid:
    """Row-major ``nt x nu`` grid of vertices; row i is t_i, column j is u_j."""

    nt: int
    nu: int
    vertices: np.ndarray
    t_range: tuple[float, float]
    u_range: tuple[float, float]

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=float).reshape(self.nt * self.nu, 3)
        if self.nt < 2 or self.nu < 2:
            raise ValueError("a mesh grid needs nt, nu >= 2")
        if not np.all(np.isfinite(self.vertices)):
            raise ValueError("mesh has non-finite vertices")

    def vertex(self, i: int, j: int) -> np.ndarray:
        return self.vertices[i * self.nu + j]

    def faces(self) -> np.ndarray:
        """Triangles as 0-based vertex indices, two per quad."""
        out = []
        for i in range(self.nt - 1):
            for j in range(self.nu - 1):
                a = i * self.nu + j
                b = (i + 1) * self.nu + j
                c = (i + 1) * self.nu + j + 1
                d = i * self.nu + j + 1
                out.append((a, b, c))
                out.append((a, c, d))
        return np.array(out, dtype=int).reshape(-1, 3)


def sample_mesh(S: RuledSurface3, t_range, u_range, nt: int, nu: int) -> MeshGrid:
    if nt < 2 or nu < 2:
        raise ValueError("nt and nu must be at least 2")
    t0, t1 = map(float, t_range)
    u0, u1 = map(float, u_range)
    if t0 == t1:
        raise ValueError("t_range is degenerate")
    ts = np.linspace(t0, t1, nt)
    us = np.linspace(u0, u1, nu)
    verts = np.empty((nt, nu, 3))
    for i, t in enumerate(ts):
        try:
            b = S.base(t)
            a = S.director(t)
        except Exception as exc:
            raise MeshEvaluationError(i, 0, exc) from exc
        verts[i] = b[None, :] + us[:, None] * a[None, :]
    return MeshGrid(nt, nu, verts.reshape(-1, 3), (t0, t1), (u0, u1))


def fmt(v: float) -> str:
    """17 significant digits; negative zero printed as 0."""
    return format(float(v) + 0.0, ".17g")


def obj_text(m: MeshGrid) -> str:
    buf = io.StringIO()
    for x, y, z in m.vertices:
        buf.write(f"v {fmt(x)} {fmt(y)} {fmt(z)}\n")
    for a, b, c in m.faces():
        buf.write(f"f {a + 1} {b + 1} {c + 1}\n")
    return buf.getvalue()


def _write(path, text: str) -> None:
    with open(os.fspath(path), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def write_obj(m: MeshGrid, path) -> None:
    _write(path, obj_text(m))


def read_obj_vertices(path) -> np.ndarray:
    rows = []
    with open(os.fspath(path), encoding="utf-8") as fh:
        for ln in fh:
            if ln.startswith("v "):
                rows.append([float(x) for x in ln.split()[1:4]])
    return np.array(rows)


LANE_HEADER = ["t"] + [f"a{k}{c}" for k in range(4) for c in "xyz"]


def curve_csv_text(c: Curve3 | HyperDualCurve, t_range, n: int) -> str:
    if n < 2:
        raise ValueError("need at least two samples")
    ts = np.linspace(float(t_range[0]), float(t_range[1]), n)
    lines = []
    if isinstance(c, HyperDualCurve):
        lines.append(",".join(LANE_HEADER))
        for t in ts:
            vals = c(t).as_array().ravel()
            lines.append(",".join([fmt(t)] + [fmt(v) for v in vals]))
    else:
        lines.append("t,x,y,z")
        for t in ts:
            lines.append(",".join([fmt(t)] + [fmt(v) for v in c(t)]))
    return "\n".join(lines) + "\n"


def write_curve_csv(c: Curve3 | HyperDualCurve, t_range, n: int, path) -> None:
    _write(path, curve_csv_text(c, t_range, n))


@dataclass
class DevelopabilityReport:
    samples: list[tuple[float, float]]
    tol: float
    max_abs_residual: float = field(init=False)

    def __post_init__(self):
        self.max_abs_residual = max(abs(r) for _, r in self.samples)

    @property
    def verdict(self) -> bool:
        return self.max_abs_residual <= self.tol


def developability_report(S: RuledSurface3, t_range, n: int,
                          tol: float = DEFAULT_TOL) -> DevelopabilityReport:
    if n < 2:
        raise ValueError("need at least two samples")
    ts = np.linspace(float(t_range[0]), float(t_range[1]), n)
    return DevelopabilityReport([(float(t), is_developable_r3(S, t, tol).residual) for t in ts], tol)
