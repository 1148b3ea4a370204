"""Dense univariate real polynomials with exact-as-possible float arithmetic.

Coefficients are stored densely, index = degree, with no trailing zeros.
Degrees in this package never exceed a few dozen, so dense Horner
evaluation is both the simplest and the fastest choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

Scalar = Union[int, float]


def _strip(coeffs: Sequence[float]) -> tuple[float, ...]:
    cs = [float(c) for c in coeffs]
    while len(cs) > 1 and cs[-1] == 0.0:
        cs.pop()
    if not cs:
        cs = [0.0]
    return tuple(cs)


@dataclass(frozen=True)
class RealPolynomial:
    """A real polynomial ``sum(coeffs[k] * x**k)``.

    The coefficient tuple never has trailing zeros; the zero polynomial
    is represented as ``(0.0,)`` and reports degree -1.
    """

    coeffs: tuple[float, ...]

    def __init__(self, coeffs: Iterable[float]):
        object.__setattr__(self, "coeffs", _strip(list(coeffs)))

    @property
    def degree(self) -> int:
        if self.coeffs == (0.0,):
            return -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0.0,)

    def __call__(self, x):
        """Horner evaluation; works on scalars and numpy arrays alike."""
        acc = self.coeffs[-1]
        if isinstance(x, np.ndarray):
            acc = np.full_like(x, acc, dtype=float)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RealPolynomial":
        if len(self.coeffs) == 1:
            return RealPolynomial([0.0])
        return RealPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def __neg__(self) -> "RealPolynomial":
        return RealPolynomial([-c for c in self.coeffs])

    def __add__(self, other) -> "RealPolynomial":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0.0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0.0] * (n - len(other.coeffs))
        return RealPolynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __sub__(self, other) -> "RealPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "RealPolynomial":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "RealPolynomial":
        if isinstance(other, (int, float)):
            return RealPolynomial([other * c for c in self.coeffs])
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return RealPolynomial([0.0])
        out = [0.0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RealPolynomial(out)

    __rmul__ = __mul__

    def max_abs_coeff(self) -> float:
        return max(abs(c) for c in self.coeffs)

    def scaled(self) -> "RealPolynomial":
        """Divide by the largest absolute coefficient (sign-preserving)."""
        m = self.max_abs_coeff()
        if m == 0.0:
            return self
        return RealPolynomial([c / m for c in self.coeffs])

    def cauchy_root_bound(self) -> float:
        """Upper bound on the absolute value of every root (Cauchy bound)."""
        if self.degree < 1:
            return 0.0
        lead = self.coeffs[-1]
        return 1.0 + max(abs(c) for c in self.coeffs[:-1]) / abs(lead)

    def root_radius_bound(self) -> float:
        """Fujiwara bound: much tighter than Cauchy when the leading
        coefficient is small relative to the rest."""
        d = self.degree
        if d < 1:
            return 0.0
        lead = abs(self.coeffs[-1])
        best = 0.0
        for k in range(1, d + 1):
            a = abs(self.coeffs[d - k])
            if k == d:
                a *= 0.5
            if a != 0.0:
                best = max(best, (a / lead) ** (1.0 / k))
        return 2.0 * best

    def __str__(self) -> str:
        terms = [f"{c:g}*x^{k}" for k, c in enumerate(self.coeffs) if c != 0.0]
        return " + ".join(terms) if terms else "0"


def _coerce(value) -> RealPolynomial:
    if isinstance(value, RealPolynomial):
        return value
    if isinstance(value, (int, float)):
        return RealPolynomial([float(value)])
    raise TypeError(f"cannot interpret {value!r} as a polynomial")


#: The monomial x, convenient for building polynomials arithmetically.
X = RealPolynomial([0.0, 1.0])


def poly_divmod(a: RealPolynomial, b: RealPolynomial) -> tuple[RealPolynomial, RealPolynomial]:
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    div = b.coeffs
    dq = len(rem) - len(div)
    if dq < 0:
        return RealPolynomial([0.0]), a
    quot = [0.0] * (dq + 1)
    for k in range(dq, -1, -1):
        coef = rem[k + len(div) - 1] / div[-1]
        quot[k] = coef
        if coef != 0.0:
            for j, d in enumerate(div):
                rem[k + j] -= coef * d
    return RealPolynomial(quot), RealPolynomial(rem[: len(div) - 1] or [0.0])
