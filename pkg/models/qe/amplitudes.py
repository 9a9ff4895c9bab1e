"""Position amplitudes ``a`` of separable test kernels.

Amplitudes are functions of the normalized torus coordinate ``t = x / L`` in
``[0, 1)^2``. The built-in ones also know their Fourier coefficients
``a^(n) = int a(t) e^{-2 pi i <n, t>} dt`` in closed form.
"""
import math
import re

import numpy as np

from ..builder import AMPLITUDES, build_amplitude
from ..utils.errors import ArgumentError


class BaseAmplitude:

    def __call__(self, t):
        raise NotImplementedError

    def mean(self):
        """Exact torus mean, ``None`` when only quadrature knows it."""
        return None

    def fourier(self, n):
        """Exact coefficients at integer vectors ``n``, ``None`` if unknown."""
        return None

    def to_dict(self):
        raise NotImplementedError


@AMPLITUDES.register_module()
class Constant(BaseAmplitude):

    def __init__(self, value=1.0):
        self.value = float(value)

    def __call__(self, t):
        return np.full(np.shape(t)[:-1], self.value)

    def mean(self):
        return self.value

    def fourier(self, n):
        n = np.asarray(n)
        return np.where(np.all(n == 0, axis=-1), self.value, 0.0) + 0j

    def to_dict(self):
        return dict(type='Constant', value=self.value)


@AMPLITUDES.register_module()
class Cosine(BaseAmplitude):
    """``offset + scale * cos(2 pi freq t_axis)``."""

    def __init__(self, freq=1, offset=0.0, scale=1.0, axis=0):
        if int(freq) != freq or freq < 1:
            raise ArgumentError(f'freq must be a positive integer, got {freq}')
        if axis not in (0, 1):
            raise ArgumentError(f'axis must be 0 or 1, got {axis}')
        self.freq = int(freq)
        self.offset = float(offset)
        self.scale = float(scale)
        self.axis = axis

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return self.offset + self.scale * np.cos(
            2 * np.pi * self.freq * t[..., self.axis])

    def mean(self):
        return self.offset

    def fourier(self, n):
        n = np.asarray(n)
        other = n[..., 1 - self.axis]
        along = n[..., self.axis]
        out = np.where((other == 0) & (along == 0), self.offset, 0.0)
        out = out + np.where((other == 0) & (np.abs(along) == self.freq),
                             0.5 * self.scale, 0.0)
        return out + 0j

    def to_dict(self):
        return dict(type='Cosine', freq=self.freq, offset=self.offset,
                    scale=self.scale, axis=self.axis)


@AMPLITUDES.register_module()
class PeriodicGaussian(BaseAmplitude):
    """Product of two periodized Gaussians of width ``sigma`` at ``center``.

    With ``zero_mean`` the torus mean is subtracted, giving an amplitude with
    vanishing geodesic averages but broad Fourier content.
    """

    def __init__(self, sigma=0.05, center=(0.5, 0.5), zero_mean=True):
        if not 0 < sigma <= 0.1:
            raise ArgumentError(f'sigma must lie in (0, 0.1], got {sigma}')
        self.sigma = float(sigma)
        self.center = np.asarray(center, dtype=float).reshape(2)
        self.zero_mean = bool(zero_mean)

    @property
    def _mass(self):
        return (self.sigma * math.sqrt(2 * math.pi))**2

    def __call__(self, t):
        d = np.asarray(t, dtype=float) - self.center
        d = d - np.round(d)
        # images at distance >= 1.5 are below exp(-112)
        shifts = np.arange(-1, 2)
        p = np.exp(-(d[..., None] - shifts)**2 / (2 * self.sigma**2)).sum(-1)
        out = p[..., 0] * p[..., 1]
        return out - self._mass if self.zero_mean else out

    def mean(self):
        return 0.0 if self.zero_mean else self._mass

    def fourier(self, n):
        n = np.asarray(n, dtype=float)
        out = self._mass * np.exp(
            -2 * np.pi**2 * self.sigma**2 * np.sum(n**2, axis=-1))
        out = out * np.exp(-2j * np.pi * (n @ self.center))
        if self.zero_mean:
            out = np.where(np.all(n == 0, axis=-1), 0.0, out)
        return out

    def to_dict(self):
        return dict(type='PeriodicGaussian', sigma=self.sigma,
                    center=self.center.tolist(), zero_mean=self.zero_mean)


_COS = re.compile(r'^cos(\d+)(?:@([01]))?$')


def parse_amplitude(spec):
    """Amplitude from a config dict or a short name.

    Short names: ``one``, ``cosK`` (``cosK@1`` along the second axis),
    ``1+cosK``, ``bump:SIGMA`` (zero-mean periodic Gaussian).
    """
    if isinstance(spec, BaseAmplitude):
        return spec
    if isinstance(spec, dict):
        return build_amplitude(spec)
    name = str(spec).strip()
    if name == 'one':
        return Constant(1.0)
    offset = 0.0
    if name.startswith('1+'):
        offset, name = 1.0, name[2:]
    match = _COS.match(name)
    if match:
        return Cosine(int(match.group(1)), offset=offset,
                      axis=int(match.group(2) or 0))
    if name.startswith('bump:') and not offset:
        try:
            sigma = float(name.split(':', 1)[1])
        except ValueError:
            raise ArgumentError(f'bad amplitude {spec!r}') from None
        return PeriodicGaussian(sigma)
    raise ArgumentError(f'unknown amplitude {spec!r}')
