"""Level-set sampling, isosurface extraction, and topology reports.

The zero set of the defining function is a closed genus-g surface; its
genus is recovered from the Euler characteristic V - E + F of the
extracted triangle mesh.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyIsosurfaceError
from .surface import SurfaceParams

__all__ = [
    "Bounds",
    "default_bounds",
    "sample_grid",
    "extract_mesh",
    "MeshReport",
    "mesh_report",
    "levelset_mesh",
    "write_obj",
    "write_csv",
]

Bounds = tuple[tuple[float, float], tuple[float, float], tuple[float, float]]


def default_bounds(params: SurfaceParams) -> Bounds:
    """A box guaranteed to contain the surface for desk-scale parameters:
    |x| <= g+1, |y| <= 2 c^(1/4) + 1, |z| <= sqrt(2c) + 1."""
    g, c = params.g, params.c
    return (
        (-(g + 1.0), g + 1.0),
        (-(2.0 * c**0.25 + 1.0), 2.0 * c**0.25 + 1.0),
        (-(np.sqrt(2.0 * c) + 1.0), np.sqrt(2.0 * c) + 1.0),
    )


def sample_grid(params: SurfaceParams, bounds: Bounds, resolution: int):
    """Evaluate the defining function on a regular grid.

    Returns (axes, values) with values[i, j, k] at (xs[i], ys[j], zs[k]).
    """
    if resolution < 8:
        raise ValueError(f"resolution must be >= 8, got {resolution}")
    axes = [np.linspace(lo, hi, resolution) for lo, hi in bounds]
    xs, ys, zs = axes
    p = params.p()(xs)
    w = p[:, None] + (ys**2)[None, :]
    vol = 0.5 * (w**2)[:, :, None] + 0.5 * (zs**2)[None, None, :] - 0.5 * params.c
    return axes, vol


def extract_mesh(axes, vol) -> tuple[np.ndarray, np.ndarray]:
    """Zero isosurface as a triangle mesh in physical coordinates."""
    if vol.min() > 0.0 or vol.max() < 0.0:
        raise EmptyIsosurfaceError("the grid does not intersect the level set")
    from skimage import measure

    spacing = tuple(float(a[1] - a[0]) for a in axes)
    verts, faces, _, _ = measure.marching_cubes(vol, level=0.0, spacing=spacing)
    origin = np.array([a[0] for a in axes])
    return verts + origin, faces


@dataclass(frozen=True)
class MeshReport:
    n_vertices: int
    n_edges: int
    n_faces: int

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    @property
    def genus(self) -> float:
        """(2 - chi)/2; an integer for a closed connected surface."""
        return (2 - self.euler_characteristic) / 2


def mesh_report(verts: np.ndarray, faces: np.ndarray) -> MeshReport:
    edges = set()
    for a, b, c in faces:
        for i, j in ((a, b), (b, c), (c, a)):
            edges.add((min(i, j), max(i, j)))
    return MeshReport(n_vertices=len(verts), n_edges=len(edges), n_faces=len(faces))


def levelset_mesh(params: SurfaceParams, resolution: int,
                  bounds: Bounds | None = None):
    """Sample, extract, and report in one call.

    Returns (verts, faces, report).
    """
    if bounds is None:
        bounds = default_bounds(params)
    axes, vol = sample_grid(params, bounds, resolution)
    verts, faces = extract_mesh(axes, vol)
    return verts, faces, mesh_report(verts, faces)


def write_obj(fp, verts: np.ndarray, faces: np.ndarray) -> None:
    """Wavefront OBJ text; face indices are 1-based per the format."""
    for v in verts:
        fp.write(f"v {float(v[0])!r} {float(v[1])!r} {float(v[2])!r}\n")
    for f in faces:
        fp.write(f"f {f[0] + 1} {f[1] + 1} {f[2] + 1}\n")


def write_csv(fp, verts: np.ndarray, faces: np.ndarray) -> None:
    """One triangle per row: x1,y1,z1,x2,y2,z2,x3,y3,z3."""
    fp.write("x1,y1,z1,x2,y2,z2,x3,y3,z3\n")
    for f in faces:
        cells = [repr(float(c)) for idx in f for c in verts[idx]]
        fp.write(",".join(cells) + "\n")
