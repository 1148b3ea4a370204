"""Scalar and polynomial machinery of the genus-g level-set surfaces.

The defining data is the even polynomial ``p(x) = alpha * G(x^2) - sqrt(c)``
with ``G(t) = prod_{k=1..g} (t - k^2)``. Everything here is a pure function
of the parameter tuple ``(g, alpha, c, hbar)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ParameterRangeError
from .poly import X, RealPolynomial
from . import rootfind

__all__ = [
    "SurfaceParams",
    "alpha_upper_bound",
    "build_G",
    "max_G",
    "build_p",
    "p_prime_at_integer",
    "p_hat",
    "q_h",
    "r_h_pair",
    "f_type_i",
    "f_3d",
    "f_3d_quadratic",
    "r_3d",
    "MBoundsReport",
    "check_M_bounds",
    "PZeroReport",
    "check_p_zero",
    "level_set_C",
]


def _require_genus(g: int) -> int:
    if not isinstance(g, int) or isinstance(g, bool) or g < 1:
        raise ParameterRangeError(f"genus must be an integer >= 1, got {g!r}")
    return g


@lru_cache(maxsize=None)
def build_G(g: int) -> RealPolynomial:
    """The monic degree-g polynomial ``G(t) = prod_{k=1..g} (t - k^2)``.

    Coefficients are expanded in exact integer arithmetic before the
    conversion to floats (exact for every genus of practical size).
    """
    _require_genus(g)
    coeffs = [1]
    for k in range(1, g + 1):
        sq = k * k
        coeffs = [0] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= sq * coeffs[i + 1]
    return RealPolynomial([float(c) for c in coeffs])


def _G_int(g: int, t: int) -> int:
    """Exact integer evaluation of G at an integer point."""
    out = 1
    for k in range(1, g + 1):
        out *= t - k * k
    return out


@lru_cache(maxsize=None)
def max_G(g: int) -> float:
    """Maximum of G over the closed interval ``[0, g^2 + 1]``.

    Endpoints are evaluated exactly in integer arithmetic; interior
    critical points come from isolating the real roots of G'.
    """
    _require_genus(g)
    G = build_G(g)
    hi = g * g + 1
    best = float(max(_G_int(g, 0), _G_int(g, hi)))
    for r in rootfind.real_roots(G.derivative(), 0.0, float(hi)):
        best = max(best, G(r))
    return best


def alpha_upper_bound(g: int, c: float) -> float:
    """The open upper bound ``2*sqrt(c) / M(g)`` of the admissible alpha range."""
    if c <= 0:
        raise ParameterRangeError(f"c must be positive, got {c}")
    return 2.0 * math.sqrt(c) / max_G(g)


@dataclass(frozen=True)
class SurfaceParams:
    """The validated parameter tuple (g, alpha, c, hbar) of a surface algebra.

    Raises :class:`ParameterRangeError` unless ``g >= 1``, ``c > 0``,
    ``hbar > 0`` and ``0 < alpha < 2*sqrt(c)/M(g)``.
    """

    g: int
    alpha: float
    c: float
    hbar: float

    def __post_init__(self):
        _require_genus(self.g)
        if not self.c > 0:
            raise ParameterRangeError(f"c must be positive, got {self.c}")
        if not self.hbar > 0:
            raise ParameterRangeError(f"hbar must be positive, got {self.hbar}")
        bound = alpha_upper_bound(self.g, self.c)
        if not 0 < self.alpha < bound:
            raise ParameterRangeError(
                f"alpha must lie in (0, {bound:.6g}) for g={self.g}, c={self.c}; "
                f"got {self.alpha}"
            )

    def p(self) -> RealPolynomial:
        return build_p(self.g, self.alpha, self.c)

    def p_prime(self) -> RealPolynomial:
        return _p_prime(self.g, self.alpha, self.c)

    def ratio(self) -> float:
        """The rescaling-invariant combination alpha / sqrt(c)."""
        return self.alpha / math.sqrt(self.c)


@lru_cache(maxsize=None)
def build_p(g: int, alpha: float, c: float) -> RealPolynomial:
    """The even degree-2g polynomial ``p(x) = alpha * G(x^2) - sqrt(c)``.

    The alpha range is deliberately not enforced here; only the validated
    :class:`SurfaceParams` constructor enforces it.
    """
    _require_genus(g)
    if c <= 0:
        raise ParameterRangeError(f"c must be positive, got {c}")
    G = build_G(g)
    coeffs = [0.0] * (2 * g + 1)
    for k, gk in enumerate(G.coeffs):
        coeffs[2 * k] = alpha * gk
    coeffs[0] -= math.sqrt(c)
    return RealPolynomial(coeffs)


@lru_cache(maxsize=None)
def _p_prime(g: int, alpha: float, c: float) -> RealPolynomial:
    return build_p(g, alpha, c).derivative()


def p_prime_at_integer(g: int, alpha: float, k: int) -> float:
    """Closed form ``p'(k) = (-1)^(g-k) * alpha * (g+k)! * (g-k)! / k``.

    Valid at the integer points ``k = 1..g``; exact integer arithmetic is
    used for the factorial ratio.
    """
    if not 1 <= k <= g:
        raise ValueError(f"closed form holds for k in 1..g, got k={k}")
    mag = math.factorial(g + k) * math.factorial(g - k) // k
    return (-1) ** (g - k) * alpha * mag


def p_hat(params: SurfaceParams, x: float, y: float) -> float:
    """Two-point symbol ``(p'(x) + p'(y)) / 2`` of the symmetric ordering.

    Symmetric in (x, y); reduces to p'(x) on the diagonal and vanishes on
    the anti-diagonal because p' is odd.
    """
    pp = params.p_prime()
    return 0.5 * (pp(x) + pp(y))


def q_h(params: SurfaceParams, x: float, y: float) -> float:
    """Kernel ``x + y - hbar^2 * p_hat(x, y)`` of the diagonal-X equations."""
    return x + y - params.hbar**2 * p_hat(params, x, y)


def r_h_pair(params: SurfaceParams, x: float, y: float) -> float:
    """Kernel ``(x - y)^2 - hbar^2 (p(x) + p(y))`` of the cubic equations."""
    p = params.p()
    return (x - y) ** 2 - params.hbar**2 * (p(x) + p(y))


def f_type_i(params: SurfaceParams) -> RealPolynomial:
    """The branch-point polynomial ``2 p(x) + x p'(x) - 4 x^2 / hbar^2``.

    Its simple roots above g-1 are the admissible off-diagonal branch
    points for the two-dimensional representations with zero Y diagonal.
    """
    p = params.p()
    return 2.0 * p + X * p.derivative() - (4.0 / params.hbar**2) * X * X


def f_3d(params: SurfaceParams, x: float) -> float:
    """Consistency function of the three-dimensional star construction:
    ``(2x/h^2 - p'(x)) * (x^2/h^2 - p(0) - p(x)) - 4 p(x) p'(x)``.
    """
    p, pp = params.p(), params.p_prime()
    h2 = params.hbar**2
    return (2.0 * x / h2 - pp(x)) * (x * x / h2 - p(0.0) - p(x)) - 4.0 * p(x) * pp(x)


def f_3d_quadratic(g: int, alpha: float, c: float, x: float) -> tuple[float, float, float]:
    """Coefficients (a, b, k) of the same function viewed as a quadratic
    ``a*u^2 + b*u + k`` in ``u = 1/hbar^2`` at fixed x.
    """
    p = build_p(g, alpha, c)
    pp = p.derivative()
    p0, px, ppx = p(0.0), p(x), pp(x)
    return (
        2.0 * x**3,
        -(2.0 * x * (p0 + px) + x * x * ppx),
        ppx * (p0 - 3.0 * px),
    )


def r_3d(params: SurfaceParams, x: float) -> float:
    """Squared-magnitude kernel ``x^2/(4 hbar^2) - (p(0) + p(x))/4`` of the
    three-dimensional star construction."""
    p = params.p()
    return x * x / (4.0 * params.hbar**2) - 0.25 * (p(0.0) + p(x))


@dataclass(frozen=True)
class MBoundsReport:
    """Outcome of the two lower bounds on M = max G."""

    g: int
    m: float
    value_at_right_end: int
    bound_ratio: int  # (2g-1)! / g
    bound_square: int  # (g!)^2
    ratio_ok: bool
    square_ok: bool

    @property
    def ok(self) -> bool:
        return self.ratio_ok and self.square_ok


def check_M_bounds(g: int) -> MBoundsReport:
    """Check ``M >= (2g-1)!/g`` and ``M >= (g!)^2``.

    Bounds and the endpoint value of G are exact Python integers, so the
    comparison itself never suffers float saturation.
    """
    _require_genus(g)
    end = _G_int(g, g * g + 1)
    end0 = _G_int(g, 0)
    bound_ratio = math.factorial(2 * g - 1) // g
    bound_square = math.factorial(g) ** 2
    m = max_G(g)
    exact_max = max(end, end0)
    return MBoundsReport(
        g=g,
        m=m,
        value_at_right_end=end,
        bound_ratio=bound_ratio,
        bound_square=bound_square,
        ratio_ok=exact_max >= bound_ratio or m >= bound_ratio,
        square_ok=exact_max >= bound_square or m >= bound_square,
    )


@dataclass(frozen=True)
class PZeroReport:
    """Signs of p at the origin relative to +/- sqrt(c)."""

    p0: float
    margin_plus: float  # p(0) + 3 sqrt(c), must be > 0
    margin_minus: float  # p(0) - sqrt(c), must be < 0
    plus_ok: bool
    minus_ok: bool

    @property
    def ok(self) -> bool:
        return self.plus_ok and self.minus_ok


def check_p_zero(params: SurfaceParams) -> PZeroReport:
    """Check ``p(0) + 3 sqrt(c) > 0`` and ``p(0) - sqrt(c) < 0``.

    Both hold for every valid parameter tuple; a failure here indicates a
    bug rather than a bad input.
    """
    g = params.g
    sqc = math.sqrt(params.c)
    p0 = (-1) ** g * params.alpha * math.factorial(g) ** 2 - sqc
    plus = p0 + 3.0 * sqc
    minus = p0 - sqc
    return PZeroReport(p0=p0, margin_plus=plus, margin_minus=minus,
                       plus_ok=plus > 0.0, minus_ok=minus < 0.0)


def level_set_C(params: SurfaceParams, x, y, z):
    """The defining function ``(p(x) + y^2)^2 / 2 + z^2 / 2 - c / 2``.

    Vanishes on the genus-g surface; accepts scalars or broadcastable
    numpy arrays.
    """
    w = params.p()(x) + y * y
    return 0.5 * w * w + 0.5 * z * z - 0.5 * params.c
