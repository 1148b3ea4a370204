import numpy as np
from hypothesis import strategies as st

from genusrep.surface import SurfaceParams, alpha_upper_bound


@st.composite
def valid_params(draw, min_g=1, max_g=8, min_hbar=0.05, max_hbar=20.0):
    """A validated parameter tuple with alpha drawn inside its open range."""
    g = draw(st.integers(min_g, max_g))
    c = draw(st.floats(0.01, 100.0))
    frac = draw(st.floats(0.01, 0.99))
    hbar = draw(st.floats(min_hbar, max_hbar))
    return SurfaceParams(g=g, alpha=frac * alpha_upper_bound(g, c), c=c, hbar=hbar)


def random_params(rng, g=None, min_g=1, max_g=8, hbar=None):
    """Seeded-rng analogue of valid_params for plain loops."""
    if g is None:
        g = int(rng.integers(min_g, max_g + 1))
    c = float(rng.uniform(0.05, 10.0))
    alpha = float(rng.uniform(0.02, 0.98)) * alpha_upper_bound(g, c)
    if hbar is None:
        hbar = float(rng.uniform(0.1, 10.0))
    return SurfaceParams(g=g, alpha=alpha, c=c, hbar=hbar)


def random_hermitian(rng, n, scale=1.0):
    a = rng.normal(size=(n, n), scale=scale) + 1j * rng.normal(size=(n, n), scale=scale)
    return (a + a.conj().T) / 2.0


def relation_defects(params, x, y):
    """Independent evaluation of the two Z-eliminated relations, written
    directly from their double-commutator form (test-side oracle)."""
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    h2 = params.hbar**2
    xs = np.real(np.diag(x))
    pv = params.p()(xs)
    ppv = params.p_prime()(xs)
    px = np.diag(pv).astype(complex)
    ppx = np.diag(ppv).astype(complex)
    y2 = y @ y
    t = 0.5 * (y2 @ ppx + ppx @ y2)
    c1 = x @ y - y @ x
    d2 = (c1 @ y - y @ c1) - h2 * (px @ ppx + t)
    c2 = y @ x - x @ y
    d3 = (c2 @ x - x @ c2) - h2 * (2.0 * y @ y2 + y @ px + px @ y)
    return d2, d3
