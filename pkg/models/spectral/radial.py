"""Radial kernels ``k(r)`` with compact support ``[0, M]``."""
import math

import numpy as np
from scipy.interpolate import CubicSpline

from ..builder import PROFILES
from ..utils.bessel import bessel_j0
from ..utils.errors import ArgumentError, NumericError
from ..utils.quadrature import integrate_vec, panel_rule


def smooth_step(y):
    """C-infinity step, 0 for ``y <= 0`` and 1 for ``y >= 1``."""
    y = np.asarray(y, dtype=float)

    def f(t):
        with np.errstate(divide='ignore'):
            return np.where(t > 0, np.exp(-1.0 / np.where(t > 0, t, 1.0)), 0.0)

    a, b = f(y), f(1.0 - y)
    return a / (a + b)


def bump(x):
    """Mollifier supported in ``[-1, 1]`` and equal to 1 on ``[-1/2, 1/2]``."""
    return smooth_step(2.0 - 2.0 * np.abs(np.asarray(x, dtype=float)))


class RadialKernel:
    """Profile ``k`` evaluable on ``[0, support]`` and zero beyond."""

    support = None

    def profile(self, r):
        raise NotImplementedError

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        inside = (r >= 0) & (r <= self.support)
        out = np.where(inside, self.profile(np.where(inside, r, 0.0)), 0.0)
        return out if out.ndim else float(out)

    def euclidean_mass(self):
        """``2 pi int k(r) r dr``, the integral of ``k(|x|)`` over the plane."""
        return float(integrate_vec(
            lambda r: np.atleast_1d(2 * math.pi * self(r) * r), 0.0,
            self.support, abs_tol=0.0, rel_tol=1e-11,
            name='euclidean mass')[0])

    def hyperbolic_mass(self):
        """``2 pi int k(r) sinh(r) dr``, the integral over the disc."""
        return float(integrate_vec(
            lambda r: np.atleast_1d(2 * math.pi * self(r) * math.sinh(r)), 0.0,
            self.support, abs_tol=0.0, rel_tol=1e-11,
            name='hyperbolic mass')[0])

    def to_dict(self):
        raise NotImplementedError


@PROFILES.register_module()
class BoxProfile(RadialKernel):
    """``height`` on ``[0, radius]``."""

    def __init__(self, radius=1.0, height=1.0):
        if not radius > 0:
            raise ArgumentError(f'radius must be > 0, got {radius}')
        self.radius = float(radius)
        self.height = float(height)
        self.support = self.radius

    def profile(self, r):
        return np.full(np.shape(r), self.height)

    def to_dict(self):
        return dict(type='BoxProfile', radius=self.radius, height=self.height)


@PROFILES.register_module()
class BumpProfile(RadialKernel):
    """``height * bump(r / radius)``.

    Args:
        radius (float): Support radius.
        height (float): Peak value, ignored when ``normalize`` is set.
        normalize (str, optional): 'euclidean' or 'hyperbolic' rescales the
            profile to unit mass for that volume element.
    """

    def __init__(self, radius=1.0, height=1.0, normalize=None):
        if not radius > 0:
            raise ArgumentError(f'radius must be > 0, got {radius}')
        if normalize not in (None, 'euclidean', 'hyperbolic'):
            raise ArgumentError(f'unknown normalization {normalize!r}')
        self.radius = float(radius)
        self.support = self.radius
        self.normalize = normalize
        self.height = 1.0
        if normalize == 'euclidean':
            self.height = 1.0 / self.euclidean_mass()
        elif normalize == 'hyperbolic':
            self.height = 1.0 / self.hyperbolic_mass()
        else:
            self.height = float(height)

    def profile(self, r):
        return self.height * bump(r / self.radius)

    def to_dict(self):
        cfg = dict(type='BumpProfile', radius=self.radius,
                   normalize=self.normalize)
        if self.normalize is None:
            cfg['height'] = self.height
        return cfg


class TabulatedKernel(RadialKernel):
    """Cubic spline through samples ``(r_i, k_i)`` on ``[0, support]``."""

    def __init__(self, r, values, name='tabulated'):
        r = np.asarray(r, dtype=float)
        values = np.asarray(values, dtype=float)
        if r.ndim != 1 or r.shape != values.shape or r.size < 4:
            raise ArgumentError('a tabulated kernel needs >= 4 matching samples')
        if r[0] != 0 or np.any(np.diff(r) <= 0):
            raise ArgumentError('samples must start at 0 and increase')
        self.r = r
        self.values = values
        self.support = float(r[-1])
        self.name = name
        self._spline = CubicSpline(r, values)

    def profile(self, r):
        return self._spline(r)

    def to_dict(self):
        return dict(type='TabulatedKernel', name=self.name,
                    support=self.support, samples=int(self.r.size))


class TruncatedKernel(RadialKernel):
    """``k(r) * bump(r / r_cut)``, supported in ``[0, r_cut]``."""

    def __init__(self, kernel, r_cut):
        if not r_cut > 0:
            raise ArgumentError(f'r_cut must be > 0, got {r_cut}')
        self.kernel = kernel
        self.r_cut = float(r_cut)
        self.support = min(self.r_cut, kernel.support)

    def profile(self, r):
        return self.kernel(r) * bump(r / self.r_cut)

    def to_dict(self):
        return dict(type='TruncatedKernel', r_cut=self.r_cut,
                    kernel=self.kernel.to_dict())


def hankel(kernel, rho, abs_tol=1e-10):
    """Planar radial Fourier transform ``2 pi int_0^M k(r) J_0(rho r) r dr``.

    It is the eigenvalue of convolution with ``k(|x|)`` on ``exp(i <xi, x>)``
    for ``|xi| = rho``. Vectorized over ``rho``.
    """
    rho = np.asarray(rho, dtype=float)
    flat = np.atleast_1d(rho).ravel()
    if not flat.size:
        return np.zeros(np.shape(rho))
    top = float(flat.max())
    # enough panels to resolve the rho * r oscillations
    panels = 8 + int(math.ceil(top * kernel.support / math.pi))
    out = None
    for _ in range(8):
        x, w = panel_rule(0.0, kernel.support, panels, order=20)
        vals = kernel(x) * x * w
        new = 2 * math.pi * bessel_j0(flat[:, None] * x[None, :]) @ vals
        if out is not None and np.max(np.abs(new - out)) <= abs_tol:
            out = new
            break
        out = new
        panels *= 2
    else:
        raise NumericError('Hankel transform did not converge',
                           panels=panels, tol=abs_tol)
    out = out.reshape(np.shape(rho))
    return out if out.ndim else float(out)
