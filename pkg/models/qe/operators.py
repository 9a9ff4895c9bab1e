"""Operators of separable test kernels acting on torus eigenfunctions.

For ``A = a(x) k(d(x, y))`` and a window function ``phi`` of frequency
``xi`` the radial convolution is diagonal, ``k * phi = h(|xi|) phi`` with
the planar Hankel transform ``h``. Matrix elements therefore reduce to the
Fourier coefficients of ``a`` at ``0`` and ``2 xi``:

    <phi_cos, A phi_cos> = h(|xi|) (a^(0) + Re a^(2n))
    <phi_sin, A phi_sin> = h(|xi|) (a^(0) - Re a^(2n))

All inner products use the probability measure of the torus.
"""
import math

import numpy as np

from ..spectral.radial import hankel
from ..spectral.torus_basis import TorusEigenbasis
from ..utils.errors import ArgumentError, NumericError
from ..utils.quadrature import panel_rule
from .amplitudes import Constant
from .kernels import TestKernel

FFT_TOL = 1e-8
MAX_GRID = 8192


def _fft_coefficients(kernel, vectors, n):
    t = np.arange(n) / n
    grid = np.stack(np.meshgrid(t, t, indexing='ij'), axis=-1)
    coeffs = np.fft.fft2(kernel.amplitude(grid)) / n**2
    idx = vectors % n
    return coeffs[idx[:, 0], idx[:, 1]]


def amplitude_fourier(kernel, vectors, n_grid=64, tol=FFT_TOL, exact=True):
    """Fourier coefficients ``a^(n)`` at integer vectors ``n``.

    Closed forms are used when the amplitude has them and ``exact`` is set.
    Otherwise the amplitude is sampled on an ``N x N`` grid and ``N`` is
    doubled until two successive FFT estimates agree to ``tol``.

    Raises:
        NumericError: If the grid would exceed ``MAX_GRID`` points per axis.
    """
    vectors = np.asarray(vectors, dtype=np.int64).reshape(-1, 2)
    if exact:
        coeffs = kernel.amplitude.fourier(vectors)
        if coeffs is not None:
            return np.asarray(coeffs, dtype=complex)
    top = int(np.abs(vectors).max()) if vectors.size else 0
    n = int(n_grid)
    while n <= 2 * top:
        n *= 2
    current = _fft_coefficients(kernel, vectors, n)
    while 2 * n <= MAX_GRID:
        finer = _fft_coefficients(kernel, vectors, 2 * n)
        change = float(np.max(np.abs(finer - current), initial=0.0))
        if change <= tol:
            return finer
        current = finer
        n *= 2
    raise NumericError('amplitude Fourier coefficients did not settle',
                       grid=n, tol=tol)


def amplitude_mean(kernel, n_grid=64):
    """Torus mean of the amplitude, exact when the amplitude knows it."""
    mean = kernel.amplitude.mean()
    if mean is not None:
        return float(mean)
    return float(amplitude_fourier(kernel, [[0, 0]], n_grid=n_grid,
                                   exact=False)[0].real)


def averaged(kernel, mean=None):
    """``[A]``: the kernel with its amplitude replaced by its mean."""
    if mean is None:
        mean = amplitude_mean(kernel)
    return TestKernel(kernel.space, Constant(mean), kernel.profile)


def geodesic_average(kernel, r):
    """``[A]_r``, the torus average of ``A(x, x + r e)`` over ``x`` and ``e``."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ArgumentError('radii must be >= 0')
    out = amplitude_mean(kernel) * np.asarray(kernel.profile(r))
    return out if out.ndim else float(out)


def expected_value(kernel, lam):
    """``<A>_lam = mean(a) 2 pi int k(r) J_0(sqrt(lam) r) r dr``."""
    lam = np.asarray(lam, dtype=float)
    if np.any(lam <= 0):
        raise ArgumentError('eigenvalues must be > 0')
    mean = amplitude_mean(kernel)
    if mean == 0:
        out = np.zeros(lam.shape)
    else:
        out = mean * np.asarray(hankel(kernel.profile, np.sqrt(lam)))
    return out if out.ndim else float(out)


def _check_pair(basis, kernel):
    if not isinstance(basis, TorusEigenbasis):
        raise ArgumentError('matrix elements need a TorusEigenbasis')
    if not isinstance(kernel, TestKernel):
        raise ArgumentError('matrix elements need a TestKernel')
    if basis.space.side != kernel.space.side:
        raise ArgumentError(
            f'basis on side {basis.space.side}, kernel on '
            f'{kernel.space.side}')


def matrix_elements(basis, kernel, exact=True):
    """``<phi_j, A phi_j>`` for every function of ``basis``.

    Returns:
        np.ndarray: Cosine and sine functions interleaved, as in
            ``basis.labels``.
    """
    _check_pair(basis, kernel)
    if not len(basis):
        return np.zeros(0)
    hhat = hankel(kernel.profile, np.sqrt(basis.mode_eigenvalues))
    vectors = np.concatenate([[[0, 0]], 2 * basis.modes])
    coeffs = amplitude_fourier(kernel, vectors, n_grid=basis.grid_size(),
                               exact=exact)
    a0, a2 = coeffs[0].real, coeffs[1:].real
    out = np.empty(len(basis))
    out[0::2] = hhat * (a0 + a2)
    out[1::2] = hhat * (a0 - a2)
    return out


def matrix_element(basis, index, kernel, exact=True):
    """``<phi, A phi>`` for the function ``basis.labels[index]``."""
    if not -len(basis) <= index < len(basis):
        raise ArgumentError(f'no function {index} in a basis of {len(basis)}')
    return float(matrix_elements(basis, kernel, exact=exact)[index])


def apply_kernel(kernel, f, x, panels=8, order=20):
    """``(A f)(x) = a(x) int k(|y|) f(x + y) dy`` by a tensor Gauss rule.

    Args:
        f (callable): Function of torus points of shape ``(..., 2)``.
        x (array_like): Points of shape ``(..., 2)``.
    """
    x = np.asarray(x, dtype=float)
    flat = x.reshape(-1, 2)
    support = kernel.support
    y, w = panel_rule(-support, support, panels, order)
    offsets = np.stack(np.meshgrid(y, y, indexing='ij'), -1).reshape(-1, 2)
    weights = np.outer(w, w).ravel() * kernel.profile(
        np.hypot(offsets[:, 0], offsets[:, 1]))
    keep = weights != 0
    values = f(flat[:, None, :] + offsets[keep][None])
    out = kernel.amplitude_values(flat) * (values @ weights[keep])
    return out.reshape(x.shape[:-1])


class RadialSlice:
    """``A_r f(x) = a(x)`` times the mean of ``f`` on the circle ``|y - x| = r``.

    Zero for radii outside ``[0, M]``.
    """

    def __init__(self, kernel, r):
        self.kernel = kernel
        self.r = float(r)

    @property
    def active(self):
        return 0 <= self.r <= self.kernel.support

    def __call__(self, f, x, n_angular=128):
        x = np.asarray(x, dtype=float)
        flat = x.reshape(-1, 2)
        if not self.active:
            return np.zeros(x.shape[:-1])
        theta = 2 * np.pi * np.arange(n_angular) / n_angular
        circle = self.r * np.stack([np.cos(theta), np.sin(theta)], axis=-1)
        means = f(flat[:, None, :] + circle[None]).mean(axis=-1)
        return (self.kernel.amplitude_values(flat) * means).reshape(
            x.shape[:-1])


def disintegrate(kernel, r):
    return RadialSlice(kernel, r)


def reassemble(kernel, f, x, panels=8, order=20, n_angular=128):
    """``int_0^M (A_r f)(x) k(r) 2 pi r dr``, which recovers ``(A f)(x)``."""
    x = np.asarray(x, dtype=float)
    radii, w = panel_rule(0.0, kernel.support, panels, order)
    out = np.zeros(x.shape[:-1])
    for r, weight in zip(radii, w * kernel.profile(radii) * 2 * math.pi * radii):
        if weight:
            out = out + weight * disintegrate(kernel, r)(f, x, n_angular)
    return out
