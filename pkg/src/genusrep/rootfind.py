"""Real-root isolation and refinement for the existence arguments.

Isolation uses Sturm-sequence counting with bisection splitting; the
sequences are computed in floating point with per-step normalization,
and a dense sign-scan takes over when cancellation makes the sequence
untrustworthy. Degrees here are tiny (<= 2*genus), so robustness is
preferred over speed everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import ConvergenceError
from .poly import RealPolynomial, poly_divmod

__all__ = [
    "Bracket",
    "SturmUnstable",
    "sturm_sequence",
    "count_real_roots",
    "isolate_real_roots",
    "refine",
    "real_roots",
]

# Treat a Sturm-chain value as zero below this fraction of the evaluation's
# own magnitude scale (sum of |coeff * x^k|).
_EVAL_ZERO_REL = 1e-12
# A remainder whose coefficients all fall below this is the zero remainder.
_REMAINDER_ZERO = 1e-13
# Leading coefficients smaller than this (after normalization) make the
# Euclidean division step unreliable.
_PIVOT_MIN = 1e-8

_SCAN_STEPS = 4096


class SturmUnstable(RuntimeError):
    """Cancellation destroyed the Sturm remainder sequence."""


@dataclass(frozen=True)
class Bracket:
    """An isolating interval for one distinct real root.

    For a simple root, ``f_lo * f_hi < 0``. Roots of even multiplicity
    produce no sign change; they are reported with ``multiple=True`` and
    a bracket already shrunk to near the refinement tolerance.
    """

    lo: float
    hi: float
    f_lo: float
    f_hi: float
    multiple: bool = False

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"degenerate bracket [{self.lo}, {self.hi}]")


def _cleaned(p: RealPolynomial) -> RealPolynomial:
    """Zero out coefficients drowned by cancellation, then normalize."""
    m = p.max_abs_coeff()
    if m == 0.0:
        return p
    return RealPolynomial([c if abs(c) > _REMAINDER_ZERO * m else 0.0 for c in p.coeffs]).scaled()


def sturm_sequence(p: RealPolynomial) -> list[RealPolynomial]:
    """Sturm chain of ``p``, each member normalized to unit max coefficient.

    For a non-squarefree input the chain stops at the (numerical) gcd, which
    still counts distinct roots. Raises :class:`SturmUnstable` when a division
    pivot is too small to trust; callers fall back to a dense sign-scan.
    """
    if p.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = [p.scaled()]
    d = p.derivative()
    if d.is_zero():
        return seq
    seq.append(d.scaled())
    while seq[-1].degree > 0:
        prev, cur = seq[-2], seq[-1]
        if abs(cur.coeffs[-1]) < _PIVOT_MIN:
            raise SturmUnstable("tiny pivot in Sturm remainder sequence")
        _, r = poly_divmod(prev, cur)
        r = -r
        if r.max_abs_coeff() <= _REMAINDER_ZERO:
            break
        r = _cleaned(r)
        if r.degree >= cur.degree:
            raise SturmUnstable("remainder degree failed to decrease")
        seq.append(r)
    return seq


def _eval_with_scale(p: RealPolynomial, x: float) -> tuple[float, float]:
    value = 0.0
    scale = 0.0
    xk = 1.0
    for c in p.coeffs:
        value += c * xk
        scale += abs(c * xk)
        xk *= x
    return value, max(scale, 1.0)


def _is_tiny(p: RealPolynomial, x: float) -> bool:
    v, scale = _eval_with_scale(p, x)
    return abs(v) <= _EVAL_ZERO_REL * scale


def _sign_changes_at(seq: Sequence[RealPolynomial], x: float) -> int:
    signs = []
    for p in seq:
        v, scale = _eval_with_scale(p, x)
        if abs(v) > _EVAL_ZERO_REL * scale:
            signs.append(v > 0.0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _rescale(p: RealPolynomial) -> tuple[RealPolynomial, float]:
    """Substitute x = s*t with s the root-radius bound, so every root of
    the result lies in |t| <= 1 and the leading coefficient dominates."""
    s = p.root_radius_bound()
    if not (math.isfinite(s) and s > 0.0):
        s = 1.0
    q = RealPolynomial([c * s**k for k, c in enumerate(p.coeffs)]).scaled()
    return q, s


def count_real_roots(p: RealPolynomial, lo: float, hi: float) -> int:
    """Number of distinct real roots of ``p`` in the half-open ``(lo, hi]``.

    Falls back to a dense sign-scan count (which misses roots of even
    multiplicity) if the float Sturm chain is unusable.
    """
    if not lo < hi:
        raise ValueError(f"degenerate interval [{lo}, {hi}]")
    q, s = _rescale(p)
    try:
        seq = sturm_sequence(q)
    except SturmUnstable:
        return len(_scan_isolate(q, lo / s, hi / s))
    return _sign_changes_at(seq, lo / s) - _sign_changes_at(seq, hi / s)


def _scan_isolate(p: RealPolynomial, lo: float, hi: float, steps: int = _SCAN_STEPS) -> list[Bracket]:
    """Fallback: bracket sign changes on a uniform grid (misses even roots)."""
    xs = [lo + (hi - lo) * i / steps for i in range(steps + 1)]
    vals = [p(x) for x in xs]
    out = []
    for a, b, fa, fb in zip(xs, xs[1:], vals, vals[1:]):
        if fa == 0.0:
            continue
        if fa * fb < 0.0 or (fb == 0.0 and b == hi):
            out.append(Bracket(a, b, fa, fb))
    return out


def _safe_point(q: RealPolynomial, lo: float, hi: float) -> float | None:
    """A point near the middle of [lo, hi] where q is clearly nonzero."""
    mid = 0.5 * (lo + hi)
    if not _is_tiny(q, mid):
        return mid
    step = (hi - lo) * 1e-3
    for i in range(1, 400):
        for cand in (mid + i * step, mid - i * step):
            if lo < cand < hi and not _is_tiny(q, cand):
                return cand
        if mid + i * step >= hi and mid - i * step <= lo:
            break
    return None


def _multiple_bracket(q: RealPolynomial, lo: float, hi: float, tol: float) -> Bracket:
    """Center a no-sign-change (even multiplicity) root on the sign change
    of the derivative, which is simple there."""
    center = 0.5 * (lo + hi)
    d = q.derivative()
    w = max(hi - lo, tol, 1e-14)
    cap = max(1e-3, 8.0 * (hi - lo))
    while w <= cap:
        a, b = center - w, center + w
        da, db = d(a), d(b)
        if da == 0.0 or db == 0.0:
            w *= 2.0
            continue
        if da * db < 0.0:
            r = refine(Bracket(a, b, da, db), d, tol=tol)
            half = max(tol, 8 * math.ulp(max(abs(r), 1.0)))
            return Bracket(r - half, r + half, q(r - half), q(r + half), multiple=True)
        w *= 2.0
    return Bracket(lo, hi, q(lo), q(hi), multiple=True)


def _shrink_to_bracket(
    q: RealPolynomial, seq: Sequence[RealPolynomial], lo: float, hi: float, tol: float
) -> Bracket:
    """Shrink an interval known to hold exactly one distinct root of q."""
    f_lo, f_hi = q(lo), q(hi)
    while True:
        if f_lo != 0.0 and f_hi != 0.0 and f_lo * f_hi < 0.0:
            return Bracket(lo, hi, f_lo, f_hi)
        if f_hi == 0.0:
            # The root sits exactly on the right endpoint; nudge outward to
            # restore a sign change for the refiner.
            w = max(tol, 8 * math.ulp(max(abs(hi), 1.0)))
            for _ in range(60):
                probe = q(hi + w)
                if probe != 0.0 and f_lo * probe < 0.0:
                    return Bracket(lo, hi + w, f_lo, probe)
                if probe != 0.0 and probe * f_lo > 0.0:
                    break  # even multiplicity at hi
                w *= 2.0
            return _multiple_bracket(q, hi - max(tol, w), hi + max(tol, w), tol)
        if hi - lo <= max(tol, 8 * math.ulp(max(abs(lo), abs(hi)))):
            return _multiple_bracket(q, lo, hi, tol)
        mid = _safe_point(q, lo, hi)
        if mid is None:
            # The whole interval sits inside the flat zone of the root.
            return _multiple_bracket(q, lo, hi, tol)
        if _sign_changes_at(seq, lo) - _sign_changes_at(seq, mid) >= 1:
            hi, f_hi = mid, q(mid)
        else:
            lo, f_lo = mid, q(mid)


def isolate_real_roots(p: RealPolynomial, lo: float, hi: float, tol: float = 1e-12) -> list[Bracket]:
    """Disjoint brackets, one per distinct real root of ``p`` in ``(lo, hi]``.

    Internally the variable is rescaled by the Fujiwara root-radius bound,
    which clamps the search window and keeps the leading coefficient
    dominant, so the float Sturm chain stays well conditioned even for
    polynomials with a tiny leading coefficient.
    """
    if not lo < hi:
        raise ValueError(f"degenerate interval [{lo}, {hi}]")
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree < 1:
        return []
    q, s = _rescale(p)
    margin = 1.0 + 1e-9
    lo_t = max(lo / s, -margin)
    hi_t = min(hi / s, margin)
    if not lo_t < hi_t:
        return []

    try:
        seq = sturm_sequence(q)
    except SturmUnstable:
        return [_rescaled_bracket(p, br, s) for br in _scan_isolate(q, lo_t, hi_t)]

    brackets: list[Bracket] = []
    stack = [(lo_t, hi_t)]
    while stack:
        a, b = stack.pop()
        n = _sign_changes_at(seq, a) - _sign_changes_at(seq, b)
        if n <= 0:
            continue
        if n == 1:
            brackets.append(_shrink_to_bracket(q, seq, a, b, tol / s))
            continue
        mid = _safe_point(q, a, b)
        if mid is None:
            # Several distinct roots inside one flat zone: report the zone.
            brackets.append(_multiple_bracket(q, a, b, tol / s))
            continue
        stack.append((a, mid))
        stack.append((mid, b))
    return sorted((_rescaled_bracket(p, br, s) for br in brackets), key=lambda br: br.lo)


def _rescaled_bracket(p: RealPolynomial, br: Bracket, s: float) -> Bracket:
    lo, hi = br.lo * s, br.hi * s
    return Bracket(lo, hi, p(lo), p(hi), multiple=br.multiple)


def refine(
    bracket: Bracket,
    f: Callable[[float], float],
    tol: float = 1e-12,
    max_iter: int = 256,
) -> float:
    """Refine a sign-change bracket of ``f`` to width ``tol``.

    Alternates bisection with secant steps clipped to the bracket, so the
    width at least halves every two iterations and the iterate never
    leaves the initial interval.
    """
    if bracket.multiple:
        raise ValueError("cannot refine a bracket flagged as a multiple root")
    a, b = bracket.lo, bracket.hi
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0.0:
        raise ValueError("bracket endpoints do not straddle a sign change of f")
    for i in range(max_iter):
        width_floor = max(tol, 8 * math.ulp(max(abs(a), abs(b))))
        if b - a <= width_floor:
            return 0.5 * (a + b)
        if i % 2 == 0:
            x = 0.5 * (a + b)
        else:
            denom = fb - fa
            x = b - fb * (b - a) / denom if denom != 0.0 else 0.5 * (a + b)
            if not a < x < b:
                x = 0.5 * (a + b)
        fx = f(x)
        if fx == 0.0:
            return x
        if (fa < 0.0) != (fx < 0.0):
            b, fb = x, fx
        else:
            a, fa = x, fx
    raise ConvergenceError(
        f"bracket refinement did not reach width {tol} in {max_iter} iterations"
    )


def real_roots(p: RealPolynomial, lo: float, hi: float, tol: float = 1e-12) -> list[float]:
    """Refined simple real roots of ``p`` in ``(lo, hi]``, sorted ascending.

    Roots flagged as multiple (no sign change) are excluded; callers that
    need branch points of existence arguments require simple roots.
    """
    roots = []
    for br in isolate_real_roots(p, lo, hi, tol=tol):
        if br.multiple:
            continue
        roots.append(refine(br, p, tol=tol))
    return sorted(roots)
