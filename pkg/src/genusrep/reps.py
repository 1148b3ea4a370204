"""Construction, classification, and transport of explicit representations.

All constructors return triples (X, Y, Z) of hermitian matrices with X
diagonal and Z derived from the bracket of X and Y, built from the
closed forms of the two-dimensional families and the three-dimensional
star family.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import ConstraintError, ExistenceError, IncompatibleParametersError
from . import linalg, rootfind
from .graphs import MatrixGraph, graph_of, is_connected
from .surface import SurfaceParams, build_p, f_3d_quadratic, f_type_i

__all__ = [
    "Kind",
    "RepMeta",
    "Representation",
    "one_dim_rep",
    "one_dim_reps",
    "type_I_branch_points",
    "construct_type_I",
    "construct_type_II",
    "construct_3d_string",
    "is_degenerate",
    "transport",
    "Classification",
    "classify",
]


class Kind(str, Enum):
    ONE_DIM = "1d"
    TYPE_I = "typeI"
    TYPE_II = "typeII"
    THREE_DIM_STRING = "3d"
    CUSTOM = "custom"


@dataclass(frozen=True)
class RepMeta:
    """Branch data of a constructed representation."""

    x_hat: float | None = None
    thetas: tuple[float, ...] = ()
    y_sign: int | None = None


@dataclass(frozen=True)
class Representation:
    """A candidate triple (X, Y, Z) together with its parameters.

    X is diagonal with real entries and Z always equals [X, Y]/(i*hbar);
    matrices are stored read-only.
    """

    params: SurfaceParams
    X: np.ndarray
    Y: np.ndarray
    Z: np.ndarray
    kind: Kind = Kind.CUSTOM
    meta: RepMeta = field(default_factory=RepMeta)

    def __post_init__(self):
        x = linalg.require_hermitian(self.X, "X").copy()
        y = linalg.require_hermitian(self.Y, "Y").copy()
        z = linalg.require_hermitian(self.Z, "Z").copy()
        linalg.require_square(x, y, z)
        scale = max(1.0, float(np.abs(x).max()))
        if np.abs(x - np.diag(np.diag(x))).max() > 1e-12 * scale:
            raise ValueError("X must be diagonal")
        for m in (x, y, z):
            m.setflags(write=False)
        object.__setattr__(self, "X", x)
        object.__setattr__(self, "Y", y)
        object.__setattr__(self, "Z", z)

    @property
    def dim(self) -> int:
        return self.X.shape[0]

    @property
    def x_diag(self) -> np.ndarray:
        return np.real(np.diag(self.X))

    def residuals(self) -> linalg.ResidualReport:
        return linalg.relation_residuals(self.params, self.X, self.Y, self.Z)

    def graph(self) -> MatrixGraph:
        return graph_of(self.Y)


def _rep(params: SurfaceParams, x, y, kind: Kind, meta: RepMeta) -> Representation:
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    z = linalg.derive_z(params, x, y)
    return Representation(params=params, X=x, Y=y, Z=z, kind=kind, meta=meta)


# ---------------------------------------------------------------------------
# 1-dimensional representations


def one_dim_rep(params: SurfaceParams, x: float, tol: float = 1e-9) -> Representation:
    """The 1-dimensional representation at the point x, if one exists.

    Either p(x) < 0 and y = sqrt(-p(x)), or x is a critical point of p
    with p(x) >= 0 and y = 0. Z vanishes in both branches, so every such
    representation is degenerate.
    """
    p = params.p()
    px = float(p(x))
    scale = max(1.0, sum(abs(c * x**k) for k, c in enumerate(p.coeffs)))
    if px < -tol * scale:
        y = math.sqrt(-px)
    elif abs(params.p_prime()(x)) <= tol * scale and px >= -tol * scale:
        y = 0.0
    else:
        raise ConstraintError(
            "p(x) < 0 or (p'(x) = 0 and p(x) >= 0)",
            f"no 1-dimensional representation at x={x}: p(x)={px:.6g}",
        )
    return _rep(params, [[x]], [[y]], Kind.ONE_DIM, RepMeta(x_hat=float(x)))


def one_dim_reps(params: SurfaceParams, xs: Sequence[float] | None = None) -> list[Representation]:
    """A finite catalogue of 1-dimensional representations.

    The default sample points are the integers 0..g together with every
    real root of p and of p' in [-(g+1), g+1]; points supporting neither
    branch are skipped.
    """
    if xs is None:
        g = params.g
        points = [float(k) for k in range(g + 1)]
        lo, hi = -(g + 1.0), g + 1.0
        points += rootfind.real_roots(params.p(), lo, hi)
        points += rootfind.real_roots(params.p_prime(), lo, hi)
        points.sort()
        xs = []
        for pt in points:
            if not xs or abs(pt - xs[-1]) > 1e-9 * max(1.0, abs(pt)):
                xs.append(pt)
    out = []
    for x in xs:
        try:
            out.append(one_dim_rep(params, float(x)))
        except ConstraintError:
            continue
    return out


# ---------------------------------------------------------------------------
# 2-dimensional representations


def type_I_branch_points(params: SurfaceParams) -> list[float]:
    """All simple roots above g-1 of the branch-point polynomial.

    Existence of at least one is guaranteed for g >= 2; for g = 1 the
    list may be empty (the polynomial degenerates to an even quadratic
    with no real roots once hbar is small).
    """
    f = f_type_i(params)
    lo = float(params.g - 1)
    hi = max(f.root_radius_bound() * 1.001, lo + 1.0)
    return rootfind.real_roots(f, lo, hi)


def construct_type_I(params: SurfaceParams, theta: float = 0.0,
                     root_index: int = 0) -> Representation:
    """Two-dimensional representation with zero Y diagonal.

    Picks the smallest simple branch point x_hat > g-1 by default
    (``root_index`` selects a later one), verifies the positivity gate,
    and assembles X = diag(x_hat, -x_hat), off-diagonal Y, and Z.
    """
    roots = type_I_branch_points(params)
    if not roots:
        raise ExistenceError(
            f"no real branch point x > {params.g - 1} exists for g={params.g}, "
            f"hbar={params.hbar}; guaranteed to exist only for g >= 2"
        )
    if not 0 <= root_index < len(roots):
        raise ValueError(f"root_index {root_index} out of range; {len(roots)} roots found")
    x_hat = roots[root_index]
    h = params.hbar
    radicand = 2.0 * x_hat**2 - h**2 * params.p()(x_hat)
    if radicand <= 0.0:
        raise ConstraintError(
            "2*x_hat^2 - hbar^2*p(x_hat) > 0",
            f"positivity gate fails at x_hat={x_hat}: {radicand:.6g} <= 0",
        )
    z = cmath.exp(1j * theta) * math.sqrt(radicand) / h
    x = np.diag([x_hat, -x_hat]).astype(complex)
    y = np.array([[0.0, z], [z.conjugate(), 0.0]])
    return _rep(params, x, y, Kind.TYPE_I, RepMeta(x_hat=x_hat, thetas=(theta,)))


def construct_type_II(g: int, alpha: float, c: float, x_hat: float,
                      theta: float = 0.0, y_sign: int = 1) -> tuple[float, Representation]:
    """Two-dimensional representation with equal nonzero Y diagonal.

    The branch point x_hat is the primary input; hbar is derived from
    ``2*x_hat + hbar^2 p'(x_hat) = 0``. Returns (hbar, representation).
    """
    if y_sign not in (1, -1):
        raise ValueError(f"y_sign must be +1 or -1, got {y_sign}")
    if x_hat == 0.0:
        raise ConstraintError("x_hat != 0")
    p = build_p(g, alpha, c)
    pp = p.derivative()
    ppx = float(pp(x_hat))
    if ppx >= 0.0:
        raise ConstraintError("p'(x_hat) < 0", f"p'({x_hat}) = {ppx:.6g} >= 0")
    h2 = -2.0 * x_hat / ppx
    if h2 <= 0.0:
        raise ConstraintError("-2*x_hat/p'(x_hat) > 0",
                              f"derived hbar^2 = {h2:.6g} is not positive")
    gate = 2.0 * float(p(x_hat)) - x_hat * ppx
    if gate >= 0.0:
        raise ConstraintError("2*p(x_hat) - x_hat*p'(x_hat) < 0",
                              f"gate value {gate:.6g} >= 0")
    hbar = math.sqrt(h2)
    params = SurfaceParams(g=g, alpha=alpha, c=c, hbar=hbar)

    px = float(p(x_hat))
    y = y_sign * math.sqrt(3.0 * x_hat**2 - h2 * px) / (2.0 * hbar)
    z_rad = -(x_hat**2) - h2 * px
    z = cmath.exp(1j * theta) * math.sqrt(max(z_rad, 0.0)) / (2.0 * hbar)
    x = np.diag([x_hat, -x_hat]).astype(complex)
    ymat = np.array([[y, z], [z.conjugate(), y]])
    rep = _rep(params, x, ymat, Kind.TYPE_II,
               RepMeta(x_hat=x_hat, thetas=(theta,), y_sign=y_sign))
    return hbar, rep


# ---------------------------------------------------------------------------
# The 3-dimensional star representation


def construct_3d_string(g: int, alpha: float, c: float, theta1: float = 0.0,
                        theta2: float = 0.0,
                        x_hat: float | None = None) -> tuple[float, Representation]:
    """Three-dimensional representation with X = diag(0, x_hat, -x_hat).

    By default x_hat = g-1, where a positive root of the quadratic in
    u = 1/hbar^2 always exists; an explicit x_hat is accepted subject to
    the same consistency and positivity gates. Returns (hbar, rep).
    """
    if x_hat is None:
        x_hat = float(g - 1)
    if x_hat == 0.0:
        raise ConstraintError("x_hat != 0",
                              "the star construction needs x_hat != 0 (g >= 2 for the default)")
    a, b, k = f_3d_quadratic(g, alpha, c, x_hat)
    disc = b * b - 4.0 * a * k
    if disc < 0.0:
        raise ExistenceError(f"no real value of 1/hbar^2 at x_hat={x_hat}")
    sq = math.sqrt(disc)
    q = -0.5 * (b + math.copysign(sq, b))
    candidates = set()
    if q != 0.0:
        candidates.add(q / a)
        candidates.add(k / q)
    u_roots = sorted(u for u in candidates if u > 0.0)
    if not u_roots:
        raise ExistenceError(f"no positive root for 1/hbar^2 at x_hat={x_hat}")

    p = build_p(g, alpha, c)
    p0 = float(p(0.0))
    px = float(p(x_hat))
    last_radicand = None
    for u in u_roots:
        hbar = 1.0 / math.sqrt(u)
        radicand = x_hat**2 - hbar**2 * (px + p0)
        last_radicand = radicand
        if radicand > 0.0:
            break
    else:
        raise ConstraintError(
            "x_hat^2 - hbar^2*(p(x_hat) + p(0)) > 0",
            f"positivity gate fails at x_hat={x_hat}: {last_radicand:.6g} <= 0",
        )
    params = SurfaceParams(g=g, alpha=alpha, c=c, hbar=hbar)

    r = math.sqrt(radicand) / (2.0 * hbar)
    z1 = r * cmath.exp(1j * theta1)
    z2 = r * cmath.exp(1j * theta2)
    x = np.diag([0.0, x_hat, -x_hat]).astype(complex)
    y = np.array([
        [0.0, z1, z2],
        [z1.conjugate(), 0.0, 0.0],
        [z2.conjugate(), 0.0, 0.0],
    ])
    rep = _rep(params, x, y, Kind.THREE_DIM_STRING,
               RepMeta(x_hat=x_hat, thetas=(theta1, theta2)))
    return hbar, rep


# ---------------------------------------------------------------------------
# Predicates and transport


def is_degenerate(rep: Representation, tol: float = 1e-9) -> bool:
    """True when Z vanishes relative to the sizes of X and Y."""
    scale = max(1.0, linalg.frobenius(rep.X) * linalg.frobenius(rep.Y))
    return linalg.frobenius(rep.Z) <= tol * scale


def transport(rep: Representation, alpha2: float, c2: float) -> Representation:
    """Carry a representation along the rescaling isomorphism.

    Requires alpha/sqrt(c) to match; the image satisfies the relations of
    the target algebra with hbar2 = hbar1 * sqrt(alpha1/alpha2), the same
    X, Y divided by lambda, and Z divided by lambda^2.
    """
    if alpha2 <= 0 or c2 <= 0:
        raise IncompatibleParametersError(f"alpha2 and c2 must be positive, got "
                                          f"alpha2={alpha2}, c2={c2}")
    r1 = rep.params.ratio()
    r2 = alpha2 / math.sqrt(c2)
    if abs(r1 - r2) > 1e-12 * max(abs(r1), abs(r2)):
        raise IncompatibleParametersError(
            f"alpha/sqrt(c) mismatch: {r1:.17g} vs {r2:.17g}"
        )
    lam = math.sqrt(rep.params.alpha / alpha2)
    params2 = SurfaceParams(g=rep.params.g, alpha=alpha2, c=c2,
                            hbar=rep.params.hbar * lam)
    return Representation(
        params=params2,
        X=rep.X.copy(),
        Y=rep.Y / lam,
        Z=rep.Z / lam**2,
        kind=rep.kind,
        meta=rep.meta,
    )


# ---------------------------------------------------------------------------
# Classification


@dataclass(frozen=True)
class Classification:
    kind: Kind
    irreducibility: str  # "reducible", "irreducible", or "undetermined"
    graph: MatrixGraph


def _irreducibility(rep: Representation, g: MatrixGraph, tol: float) -> str:
    if not is_connected(g):
        return "reducible"
    xs = rep.x_diag
    scale = max(1.0, float(np.abs(xs).max()))
    distinct = all(
        abs(xs[i] - xs[j]) > tol * scale
        for i in range(len(xs)) for j in range(i + 1, len(xs))
    )
    return "irreducible" if distinct else "undetermined"


def _matches_one_dim(rep: Representation, tol: float) -> bool:
    p = rep.params.p()
    x = float(rep.x_diag[0])
    y = float(rep.Y[0, 0].real)
    scale = max(1.0, sum(abs(c * x**k) for k, c in enumerate(p.coeffs)), y * y)
    if abs(float(p(x)) + y * y) <= tol * scale:
        return True
    return abs(y) <= tol * scale and abs(float(rep.params.p_prime()(x))) <= tol * scale


def _matches_type_I(rep: Representation, tol: float) -> bool:
    xs = rep.x_diag
    x_hat = float(xs[0])
    scale = max(1.0, float(np.abs(rep.X).max()), float(np.abs(rep.Y).max()) ** 2)
    if abs(xs[0] + xs[1]) > tol * scale or abs(x_hat) <= tol * scale:
        return False
    if max(abs(rep.Y[0, 0]), abs(rep.Y[1, 1])) > tol * scale:
        return False
    h = rep.params.hbar
    f = f_type_i(rep.params)
    fscale = max(1.0, sum(abs(c * x_hat**k) for k, c in enumerate(f.coeffs)))
    if abs(float(f(x_hat))) > tol * fscale:
        return False
    expect = 2.0 * x_hat**2 - h**2 * float(rep.params.p()(x_hat))
    return abs(h**2 * abs(rep.Y[0, 1]) ** 2 - expect) <= tol * max(1.0, abs(expect))


def _matches_type_II(rep: Representation, tol: float) -> bool:
    xs = rep.x_diag
    x_hat = float(xs[0])
    scale = max(1.0, float(np.abs(rep.X).max()), float(np.abs(rep.Y).max()) ** 2)
    if abs(xs[0] + xs[1]) > tol * scale or abs(x_hat) <= tol * scale:
        return False
    y0, y1 = float(rep.Y[0, 0].real), float(rep.Y[1, 1].real)
    if abs(y0 - y1) > tol * scale or abs(y0) <= tol * scale:
        return False
    h = rep.params.hbar
    px = float(rep.params.p()(x_hat))
    ppx = float(rep.params.p_prime()(x_hat))
    if abs(2.0 * x_hat + h**2 * ppx) > tol * max(1.0, abs(x_hat), abs(h**2 * ppx)):
        return False
    y_expect = (3.0 * x_hat**2 - h**2 * px) / (4.0 * h**2)
    z_expect = -(x_hat**2 + h**2 * px) / (4.0 * h**2)
    return (abs(y0 * y0 - y_expect) <= tol * max(1.0, abs(y_expect))
            and abs(abs(rep.Y[0, 1]) ** 2 - z_expect) <= tol * max(1.0, abs(z_expect)))


def _matches_3d_string(rep: Representation, g: MatrixGraph, tol: float) -> bool:
    xs = rep.x_diag
    scale = max(1.0, float(np.abs(rep.X).max()), float(np.abs(rep.Y).max()) ** 2)
    centers = [i for i in range(3) if abs(xs[i]) <= tol * scale]
    if len(centers) != 1:
        return False
    hub = centers[0]
    others = [i for i in range(3) if i != hub]
    if abs(xs[others[0]] + xs[others[1]]) > tol * scale:
        return False
    if g.loops() or g.simple_edges() != {tuple(sorted((hub, o))) for o in others}:
        return False
    x_hat = abs(float(xs[others[0]]))
    h = rep.params.hbar
    p = rep.params.p()
    expect = (x_hat**2 - h**2 * (float(p(x_hat)) + float(p(0.0)))) / (4.0 * h**2)
    mags = [abs(rep.Y[hub, o]) for o in others]
    return all(abs(m * m - expect) <= tol * max(1.0, abs(expect)) for m in mags)


def classify(rep: Representation, tol: float = 1e-9) -> Classification:
    """Match a representation against the known families and decide
    irreducibility where the graph and spectrum arguments apply.

    Reducible when the graph is disconnected; irreducible when it is
    connected and the diagonal of X has distinct entries; undetermined
    otherwise (the arguments implemented here are one-sided).
    """
    g = graph_of(rep.Y)
    irr = _irreducibility(rep, g, tol)
    kind = Kind.CUSTOM
    if rep.dim == 1 and _matches_one_dim(rep, tol):
        kind = Kind.ONE_DIM
    elif rep.dim == 2:
        if _matches_type_I(rep, tol):
            kind = Kind.TYPE_I
        elif _matches_type_II(rep, tol):
            kind = Kind.TYPE_II
    elif rep.dim == 3 and _matches_3d_string(rep, g, tol):
        kind = Kind.THREE_DIM_STRING
    return Classification(kind=kind, irreducibility=irr, graph=g)
