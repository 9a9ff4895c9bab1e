"""Laplace eigenbases of the square torus in a spectral window.

The eigenvalues of ``R^2 / (L Z)^2`` are ``|xi|^2`` for ``xi`` in the dual
lattice ``(2 pi / L) Z^2``. A window is enumerated row by row in the first
integer coordinate, with exact float membership tests, so the output order
is lexicographic and identical to a brute-force search.
"""
import math
from collections import namedtuple

import numpy as np

from ..geometry.spaces import FlatTorus
from ..utils.errors import ArgumentError, PreconditionError
from .windows import SpectralWindow, tile_windows

WeylCount = namedtuple('WeylCount', 'count prediction rel_error')


def _eigenvalue(q2, m, n):
    return q2 * (m * m + n * n).astype(float)


def _n_bounds(m, lower, upper, q2):
    """Per row ``m``, the range ``lo <= |n| <= hi`` of admissible columns.

    ``hi < 0`` or ``lo > hi`` means the row is empty.
    """
    m2 = (m * m).astype(float)
    hi = np.floor(np.sqrt(np.maximum(upper / q2 - m2, 0.0))).astype(np.int64)
    hi = np.where(upper / q2 - m2 < 0, -1, hi)
    for _ in range(2):
        hi = np.where(_eigenvalue(q2, m, hi + 1) <= upper, hi + 1, hi)
        hi = np.where((hi >= 0) & (_eigenvalue(q2, m, hi) > upper), hi - 1, hi)
    lo = np.ceil(np.sqrt(np.maximum(lower / q2 - m2, 0.0))).astype(np.int64)
    for _ in range(2):
        lo = np.where((lo > 0) & (_eigenvalue(q2, m, lo - 1) >= lower), lo - 1,
                      lo)
        lo = np.where(_eigenvalue(q2, m, lo) < lower, lo + 1, lo)
    return lo, hi


def _rows(space, window):
    q2 = space.dual_spacing**2
    m_max = int(math.floor(math.sqrt(window.upper / q2))) + 1
    m = np.arange(-m_max, m_max + 1, dtype=np.int64)
    lo, hi = _n_bounds(m, window.lower, window.upper, q2)
    return m, lo, hi


def _check(space, window):
    if not isinstance(space, FlatTorus):
        raise ArgumentError(
            f'eigenbases are enumerated on FlatTorus, got {type(space).__name__}')
    if not isinstance(window, SpectralWindow):
        raise ArgumentError('window must be a SpectralWindow')


def count_window(space, window):
    """Number of dual-lattice vectors with ``|xi|^2`` in the window."""
    _check(space, window)
    _, lo, hi = _rows(space, window)
    width = hi - lo + 1
    per_row = np.where(width <= 0, 0, np.where(lo == 0, 2 * width - 1,
                                               2 * width))
    return int(per_row.sum())


def enumerate_window(space, window):
    """All dual-lattice vectors whose eigenvalue lies in ``window``.

    Returns:
        TorusEigenbasis: Possibly empty.
    """
    _check(space, window)
    m, lo, hi = _rows(space, window)
    vectors = []
    for mi, a, b in zip(m.tolist(), lo.tolist(), hi.tolist()):
        if b < a:
            continue
        pos = np.arange(max(a, 1), b + 1)
        cols = np.concatenate([-pos[::-1], [0] if a == 0 else [], pos])
        vectors.append(np.stack([np.full(cols.size, mi), cols], axis=-1))
    if vectors:
        vectors = np.concatenate(vectors).astype(np.int64)
    else:
        vectors = np.zeros((0, 2), dtype=np.int64)
    return TorusEigenbasis(space, window, vectors)


def brute_force_window(space, window):
    """Reference enumeration by a full scan of the bounding box."""
    q2 = space.dual_spacing**2
    k = int(math.floor(math.sqrt(window.upper / q2))) + 1
    m, n = np.meshgrid(np.arange(-k, k + 1), np.arange(-k, k + 1),
                       indexing='ij')
    m, n = m.ravel(), n.ravel()
    lam = _eigenvalue(q2, m, n)
    keep = (lam >= window.lower) & (lam <= window.upper)
    return np.stack([m[keep], n[keep]], axis=-1)


class TorusEigenbasis:
    """Real orthonormal eigenfunctions of a torus window.

    Each pair ``+-xi`` contributes ``sqrt(2) cos(<xi, x>)`` and
    ``sqrt(2) sin(<xi, x>)``, so the number of functions equals the number
    of lattice vectors. Functions are orthonormal for the probability
    measure on the torus.

    Attributes:
        vectors (np.ndarray): ``(k, 2)`` integer vectors, both signs.
        modes (np.ndarray): ``(k / 2, 2)`` one representative per pair, the
            one with ``m > 0`` or ``m == 0, n > 0``.
    """

    def __init__(self, space, window, vectors):
        self.space = space
        self.window = window
        self.vectors = np.asarray(vectors, dtype=np.int64).reshape(-1, 2)
        m, n = self.vectors[:, 0], self.vectors[:, 1]
        self.modes = self.vectors[(m > 0) | ((m == 0) & (n > 0))]
        assert 2 * len(self.modes) == len(self.vectors)
        self.vectors.setflags(write=False)
        self.modes.setflags(write=False)

    def __len__(self):
        return len(self.vectors)

    @property
    def count(self):
        return len(self)

    @property
    def frequencies(self):
        """``(k / 2, 2)`` frequencies ``xi`` of the modes."""
        return self.space.dual_spacing * self.modes.astype(float)

    @property
    def mode_eigenvalues(self):
        return self.space.eigenvalue(self.modes)

    @property
    def eigenvalues(self):
        """Eigenvalue of each function, cosine and sine interleaved."""
        return np.repeat(self.mode_eigenvalues, 2)

    @property
    def labels(self):
        """``(m, n, kind)`` per function, ``kind`` being 'cos' or 'sin'."""
        return [(int(m), int(n), kind) for m, n in self.modes.tolist()
                for kind in ('cos', 'sin')]

    def evaluate(self, x):
        """Values ``phi_j(x)``, shape ``(k,) + x.shape[:-1]``."""
        x = np.asarray(x, dtype=float)
        phase = np.einsum('jd,...d->j...', self.frequencies, x)
        out = np.empty((len(self), ) + phase.shape[1:])
        out[0::2] = math.sqrt(2.0) * np.cos(phase)
        out[1::2] = math.sqrt(2.0) * np.sin(phase)
        return out

    def combine(self, coeffs, x):
        """``sum_j c_j phi_j(x)``; ``coeffs`` may carry leading batch axes."""
        coeffs = np.asarray(coeffs, dtype=float)
        if coeffs.shape[-1] != len(self):
            raise ArgumentError(
                f'{coeffs.shape[-1]} coefficients for {len(self)} functions')
        values = self.evaluate(x)
        return np.tensordot(coeffs, values, axes=([-1], [0]))

    def grid_size(self, points_per_wavelength=8, minimum=64):
        """Smallest power of two with enough points per shortest wavelength."""
        if not len(self):
            return minimum
        top = float(np.sqrt((self.vectors**2).sum(-1)).max())
        n = minimum
        while n < points_per_wavelength * top:
            n *= 2
        return n

    def gram(self, n_grid=None):
        """Gram matrix under the probability measure on a uniform grid.

        Products of two window functions are trigonometric polynomials of
        degree at most ``2 * max|m|``, which a uniform grid with more points
        per axis integrates exactly.
        """
        if not len(self):
            return np.zeros((0, 0))
        top = int(np.abs(self.vectors).max())
        if n_grid is None:
            n_grid = 2 * top + 2
        if n_grid <= 2 * top:
            raise PreconditionError(
                f'grid of {n_grid} points cannot resolve degree {2 * top}')
        axis = self.space.side * np.arange(n_grid) / n_grid
        x = np.stack(np.meshgrid(axis, axis, indexing='ij'), axis=-1)
        values = self.evaluate(x.reshape(-1, 2))
        return values @ values.T / values.shape[1]

    def to_rows(self):
        lam = self.eigenvalues
        return [dict(m=m, n=n, kind=kind, eigenvalue=float(l))
                for (m, n, kind), l in zip(self.labels, lam)]


def weyl_prediction(space, window):
    """Flat Weyl prediction ``2 delta pi (L / 2 pi)^2`` of a window count."""
    return 2.0 * window.delta * math.pi * (space.side / (2 * math.pi))**2


def weyl_window_count(space, window):
    """Exact window count against its Weyl prediction.

    Returns:
        WeylCount: ``count``, ``prediction`` and relative error.
    """
    count = count_window(space, window)
    prediction = weyl_prediction(space, window)
    return WeylCount(count, prediction, abs(count - prediction) / prediction)


def band_average_count(space, lower, upper, delta):
    """Mean count over adjacent windows of half-width ``delta`` tiling a band.

    Single shrinking windows on the square torus see the arithmetic of sums
    of two squares; averaged over a band the counts follow the Weyl density.
    """
    windows = tile_windows(lower, upper, delta)
    counts = np.array([count_window(space, w) for w in windows])
    prediction = weyl_prediction(space, windows[0])
    mean = float(counts.mean())
    return WeylCount(mean, prediction, abs(mean - prediction) / prediction)
