"""Small dense complex hermitian matrix arithmetic and relation residuals.

Matrices are plain ``numpy.ndarray`` values of dtype complex128; inputs
are validated, never repaired. Residuals quantify the three defining
relations of the surface algebra and their Z-eliminated reductions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .errors import IncompatibleParametersError
from .poly import RealPolynomial
from .surface import SurfaceParams

if TYPE_CHECKING:  # pragma: no cover
    from .reps import Representation

__all__ = [
    "HERMITICITY_TOL",
    "frobenius",
    "require_square",
    "is_hermitian",
    "require_hermitian",
    "commutator",
    "apply_poly",
    "t_ordering",
    "ResidualReport",
    "relation_residuals",
    "reduced_residuals",
    "derive_z",
    "AbResidualReport",
    "ab_equation_residuals",
    "equivalence_2d",
    "equivalence_2d_bruteforce",
]

#: Absolute hermiticity tolerance, scaled by max(1, largest entry magnitude).
HERMITICITY_TOL = 1e-12


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def require_square(*mats: np.ndarray) -> int:
    dims = {m.shape[0] for m in mats}
    if len(dims) != 1:
        raise ValueError(f"dimension mismatch: {sorted(m.shape[0] for m in mats)}")
    return dims.pop()


def frobenius(a: np.ndarray) -> float:
    return float(np.linalg.norm(a, "fro"))


def is_hermitian(a: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    a = np.asarray(a, dtype=complex)
    scale = max(1.0, float(np.abs(a).max()) if a.size else 0.0)
    return bool(np.abs(a - a.conj().T).max() <= tol * scale)


def require_hermitian(a, name: str = "matrix", tol: float = HERMITICITY_TOL) -> np.ndarray:
    m = as_matrix(a)
    if not is_hermitian(m, tol):
        raise ValueError(f"{name} is not hermitian within tolerance {tol}")
    return m


def commutator(a, b) -> np.ndarray:
    """The bracket ``a @ b - b @ a``."""
    a, b = as_matrix(a), as_matrix(b)
    require_square(a, b)
    return a @ b - b @ a


def apply_poly(p: RealPolynomial, x) -> np.ndarray:
    """Matrix polynomial ``p(X)`` by Horner's scheme."""
    x = as_matrix(x)
    eye = np.eye(x.shape[0], dtype=complex)
    acc = p.coeffs[-1] * eye
    for c in reversed(p.coeffs[:-1]):
        acc = acc @ x + c * eye
    return acc


def t_ordering(params: SurfaceParams, x, y) -> np.ndarray:
    """Symmetric ordering ``(Y^2 p'(X) + p'(X) Y^2) / 2``."""
    x, y = as_matrix(x), as_matrix(y)
    require_square(x, y)
    pp = apply_poly(params.p_prime(), x)
    y2 = y @ y
    return 0.5 * (y2 @ pp + pp @ y2)


@dataclass(frozen=True)
class ResidualReport:
    """Frobenius residuals of the three defining relations.

    ``norm_scale`` is the largest Frobenius norm among the six relation
    sides, floored at 1, so the relative residuals are scale free.
    """

    res_xy: float
    res_yz: float
    res_zx: float
    norm_scale: float

    @property
    def relative(self) -> tuple[float, float, float]:
        return (self.res_xy / self.norm_scale,
                self.res_yz / self.norm_scale,
                self.res_zx / self.norm_scale)

    @property
    def max_relative(self) -> float:
        return max(self.relative)

    def within(self, tol: float) -> bool:
        return self.max_relative <= tol


def relation_residuals(params: SurfaceParams, x, y, z) -> ResidualReport:
    """Residuals of the commutation relations for candidate (X, Y, Z).

    res_xy = ||[X,Y] - i*h*Z||, res_yz = ||[Y,Z] - i*h*(p(X)p'(X) + T)||,
    res_zx = ||[Z,X] - i*h*(2Y^3 + Y p(X) + p(X) Y)||, all Frobenius.
    """
    x = require_hermitian(x, "X")
    y = require_hermitian(y, "Y")
    z = require_hermitian(z, "Z")
    require_square(x, y, z)
    h = params.hbar
    px = apply_poly(params.p(), x)
    ppx = apply_poly(params.p_prime(), x)

    lhs1 = commutator(x, y)
    rhs1 = 1j * h * z
    lhs2 = commutator(y, z)
    rhs2 = 1j * h * (px @ ppx + t_ordering(params, x, y))
    lhs3 = commutator(z, x)
    rhs3 = 1j * h * (2.0 * y @ y @ y + y @ px + px @ y)

    scale = max(1.0, *(frobenius(m) for m in (lhs1, rhs1, lhs2, rhs2, lhs3, rhs3)))
    return ResidualReport(
        res_xy=frobenius(lhs1 - rhs1),
        res_yz=frobenius(lhs2 - rhs2),
        res_zx=frobenius(lhs3 - rhs3),
        norm_scale=scale,
    )


def derive_z(params: SurfaceParams, x, y) -> np.ndarray:
    """The eliminated generator ``Z = [X, Y] / (i*hbar)``.

    Hermitian whenever X and Y are, since the bracket is anti-hermitian.
    """
    return commutator(x, y) / (1j * params.hbar)


def reduced_residuals(params: SurfaceParams, x, y) -> ResidualReport:
    """Residuals of the two Z-eliminated relations.

    Identical by construction to ``relation_residuals`` evaluated at the
    derived ``Z = [X,Y]/(i*hbar)``; the first residual vanishes up to
    float roundoff.
    """
    x = require_hermitian(x, "X")
    y = require_hermitian(y, "Y")
    require_square(x, y)
    return relation_residuals(params, x, y, derive_z(params, x, y))


@dataclass(frozen=True)
class AbResidualReport:
    """Entrywise defects of the two matrix-element equation families.

    ``a_defect[i, j]`` is the defect of the quadratic family at (i, j),
    ``b_defect[i, j]`` the defect of the cubic family. Both matrices are
    conjugate-symmetric, so the i <= j entries carry all information.
    """

    a_defect: np.ndarray
    b_defect: np.ndarray
    norm_scale: float

    @property
    def max_abs(self) -> float:
        return max(float(np.abs(self.a_defect).max()), float(np.abs(self.b_defect).max()))

    @property
    def max_relative(self) -> float:
        return self.max_abs / self.norm_scale


def ab_equation_residuals(params: SurfaceParams, xs: Sequence[float], y) -> AbResidualReport:
    """Defects of the diagonal-X matrix-element equations.

    For X = diag(xs), the quadratic family reads
    ``sum_k (q(x_i, x_j) - 2 x_k) y_ik y_kj = h^2 delta_ij p(x_i) p'(x_i)``
    and the cubic family
    ``2 h^2 (Y^3)_ij = r(x_i, x_j) y_ij``; all entries vanish exactly when
    the Z-eliminated relations hold.
    """
    y = require_hermitian(y, "Y")
    xv = np.asarray([float(t) for t in xs], dtype=float)
    if xv.ndim != 1 or xv.shape[0] != y.shape[0]:
        raise ValueError(f"length mismatch: {xv.shape[0]} diagonal entries for "
                         f"a {y.shape[0]}x{y.shape[0]} matrix")
    h2 = params.hbar**2
    pv = params.p()(xv)
    ppv = params.p_prime()(xv)

    q = xv[:, None] + xv[None, :] - h2 * 0.5 * (ppv[:, None] + ppv[None, :])
    r = (xv[:, None] - xv[None, :]) ** 2 - h2 * (pv[:, None] + pv[None, :])

    y2 = y @ y
    yxy = y @ np.diag(xv).astype(complex) @ y
    y3 = y2 @ y

    lhs_a = q * y2 - 2.0 * yxy
    rhs_a = h2 * np.diag(pv * ppv).astype(complex)
    lhs_b = 2.0 * h2 * y3
    rhs_b = r * y

    scale = max(1.0, *(frobenius(m) for m in (lhs_a, rhs_a, lhs_b, rhs_b)))
    return AbResidualReport(a_defect=lhs_a - rhs_a, b_defect=lhs_b - rhs_b, norm_scale=scale)


# ---------------------------------------------------------------------------
# Equivalence of 2-dimensional representations


def _check_2d_input(rep: "Representation", tol: float) -> tuple[np.ndarray, np.ndarray, float]:
    x, y = rep.X, rep.Y
    if x.shape[0] != 2:
        raise ValueError(f"equivalence test requires dimension 2, got {x.shape[0]}")
    scale = max(1.0, float(np.abs(x).max()), float(np.abs(y).max()))
    if abs(x[0, 1]) > tol * scale or abs(x[1, 0]) > tol * scale:
        raise ValueError("X must be diagonal")
    x0, x1 = float(x[0, 0].real), float(x[1, 1].real)
    if abs(x0 - x1) <= tol * scale:
        raise ValueError("X must have distinct diagonal entries")
    z = derive_z(rep.params, x, y)
    if frobenius(z) <= tol * max(1.0, frobenius(x) * frobenius(y)):
        raise ValueError("representation is degenerate")
    return x, y, scale


def _same_algebra(rep1: "Representation", rep2: "Representation") -> None:
    p1, p2 = rep1.params, rep2.params
    if p1.g != p2.g:
        raise IncompatibleParametersError(f"genus mismatch: {p1.g} vs {p2.g}")
    for name in ("alpha", "c", "hbar"):
        a, b = getattr(p1, name), getattr(p2, name)
        if abs(a - b) > 1e-12 * max(abs(a), abs(b), 1.0):
            raise IncompatibleParametersError(f"{name} mismatch: {a} vs {b}")


def _family_shape(x: np.ndarray, y: np.ndarray, tol: float, scale: float):
    """Return ("typeI"|"typeII", x_hat, y_diag) if the pair matches one of
    the two admissible 2-vertex families, else None."""
    x0, x1 = float(x[0, 0].real), float(x[1, 1].real)
    if abs(x0 + x1) > tol * scale or abs(x0) <= tol * scale:
        return None
    if abs(y[0, 1]) <= tol * scale:
        return None
    y0, y1 = float(y[0, 0].real), float(y[1, 1].real)
    if abs(y0) <= tol * scale and abs(y1) <= tol * scale:
        return ("typeI", x0, 0.0)
    if abs(y0 - y1) <= tol * scale and abs(y0) > tol * scale:
        return ("typeII", x0, y0)
    return None


def equivalence_2d(rep1: "Representation", rep2: "Representation", tol: float = 1e-9) -> bool:
    """Unitary equivalence of two non-degenerate 2-dimensional reps.

    Uses the closed-form classification of the two admissible families:
    zero-diagonal reps are equivalent iff the X entries agree up to a
    global sign, equal-diagonal reps additionally need the same Y
    diagonal. Pairs outside the two families fall back to the
    brute-force unitary search.
    """
    _same_algebra(rep1, rep2)
    x1, y1, s1 = _check_2d_input(rep1, tol)
    x2, y2, s2 = _check_2d_input(rep2, tol)
    scale = max(s1, s2)

    shape1 = _family_shape(x1, y1, tol, scale)
    shape2 = _family_shape(x2, y2, tol, scale)
    if shape1 is None or shape2 is None:
        return equivalence_2d_bruteforce(rep1, rep2, tol)
    kind1, xh1, yd1 = shape1
    kind2, xh2, yd2 = shape2
    if kind1 != kind2:
        return False
    if abs(abs(xh1) - abs(xh2)) > tol * scale:
        return False
    if kind1 == "typeII" and abs(yd1 - yd2) > tol * scale:
        return False
    return True


_PERMS_2 = (np.eye(2), np.array([[0.0, 1.0], [1.0, 0.0]]))


def equivalence_2d_bruteforce(rep1: "Representation", rep2: "Representation",
                              tol: float = 1e-9) -> bool:
    """Search the unitaries that keep a distinct diagonal X diagonal.

    Those unitaries are exactly permutation times diagonal-phase matrices;
    the free phase only rotates the off-diagonal entry of Y, so it is
    matched through the modulus.
    """
    _same_algebra(rep1, rep2)
    x1, y1, s1 = _check_2d_input(rep1, tol)
    x2, y2, s2 = _check_2d_input(rep2, tol)
    scale = max(s1, s2)
    for perm in _PERMS_2:
        px = perm @ x1 @ perm.T
        py = perm @ y1 @ perm.T
        if np.abs(np.diag(px) - np.diag(x2)).max() > tol * scale:
            continue
        if np.abs(np.diag(py) - np.diag(y2)).max() > tol * scale:
            continue
        if abs(abs(py[0, 1]) - abs(y2[0, 1])) > tol * scale:
            continue
        return True
    return False
