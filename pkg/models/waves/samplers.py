"""Seeded samplers of monochromatic Gaussian random waves.

Every sampler draws its random coefficients from ``make_rng(seed)`` alone,
so a sample is a pure function of ``(config, patch, seed)``. The batched
``sample_values`` evaluates many seeds on one coordinate set and is what the
datasets use; ``sample`` produces a :class:`FieldSample` on a patch.
"""
import logging
import math
import warnings

import numpy as np
from mmcv.utils import print_log

from ..builder import WAVES
from ..geometry.hyperbolic import boundary_point, from_normal_coordinates, \
    horocycle_bracket
from ..utils.bessel import bessel_jn_all
from ..utils.errors import ArgumentError
from ..utils.seeding import make_rng
from ..utils.structures import FieldSample
from .kernels import covariance_euclidean, spherical_function

_CHUNK = 2**22


def _world(coords, center):
    """Euclidean world coordinates ``p + R u`` of frame coordinates ``u``."""
    coords = np.asarray(coords, dtype=float).reshape(-1, 2)
    if center is None:
        return coords
    return center.point[None, :2] + coords @ center.frame.T


class BaseWave:
    """Common interface of the wave samplers."""

    def draw(self, rng):
        """Random coefficients of one realization."""
        raise NotImplementedError

    def evaluate(self, params, coords, center=None):
        """Values of realizations ``params`` at frame coordinates ``coords``.

        ``params`` holds the coefficients of ``S`` realizations stacked on
        the first axis; the result has shape ``(S, m)``.
        """
        raise NotImplementedError

    def oracle(self, r):
        """Covariance of the field at distance ``r``."""
        raise NotImplementedError

    def to_dict(self):
        raise NotImplementedError

    def _stack(self, seeds):
        draws = [self.draw(make_rng(seed)) for seed in seeds]
        return tuple(np.stack(p) for p in zip(*draws))

    def _chunk_size(self, m):
        return max(1, _CHUNK // max(1, m * self.width))

    def sample_values(self, coords, seeds, center=None):
        """Field values of every seed at ``coords``, shape ``(len(seeds), m)``."""
        coords = np.asarray(coords, dtype=float).reshape(-1, 2)
        seeds = list(seeds)
        out = np.empty((len(seeds), coords.shape[0]))
        step = self._chunk_size(coords.shape[0])
        for start in range(0, len(seeds), step):
            params = self._stack(seeds[start:start + step])
            out[start:start + step] = self.evaluate(params, coords, center)
        return out

    def sample(self, patch, seed):
        """One realization on ``patch``."""
        values = self.sample_values(
            patch.coords.reshape(-1, 2), [seed], patch.center)[0]
        return FieldSample(
            patch, values.reshape(patch.resolution, patch.resolution),
            self.to_dict(), seed)


@WAVES.register_module()
class EuclideanWave(BaseWave):
    """Isotropic Euclidean wave as a random plane-wave superposition.

    ``F(x) = sqrt(2 / n) sum_k cos(mu <x, xi_k> + theta_k)`` with directions
    ``xi_k`` uniform on the unit sphere and phases uniform. For ``dim=3`` the
    patch is the plane spanned by the first two axes.

    Args:
        mu (float): Frequency, the eigenvalue is ``mu**2``.
        dim (int): 2 or 3.
        n_directions (int): Number of plane waves, at least 16.
    """

    def __init__(self, mu=1.0, dim=2, n_directions=256):
        if not mu > 0:
            raise ArgumentError(f'mu must be > 0, got {mu}')
        if dim not in (2, 3):
            raise ArgumentError(f'dim must be 2 or 3, got {dim}')
        if int(n_directions) != n_directions or n_directions < 16:
            raise ArgumentError(
                f'n_directions must be an integer >= 16, got {n_directions}')
        self.mu = float(mu)
        self.dim = int(dim)
        self.n_directions = int(n_directions)

    @property
    def width(self):
        return self.n_directions

    def draw(self, rng):
        n = self.n_directions
        if self.dim == 2:
            angles = rng.uniform(0.0, 2 * math.pi, size=n)
            dirs = np.stack([np.cos(angles), np.sin(angles)], axis=-1)
        else:
            dirs = rng.standard_normal((n, 3))
            dirs /= np.linalg.norm(dirs, axis=-1, keepdims=True)
        phases = rng.uniform(0.0, 2 * math.pi, size=n)
        return dirs, phases

    def evaluate(self, params, coords, center=None):
        dirs, phases = params
        x = _world(coords, center)
        arg = self.mu * np.einsum('md,snd->smn', x, dirs[..., :2])
        arg += phases[:, None, :]
        return math.sqrt(2.0 / self.n_directions) * np.cos(arg).sum(-1)

    def sample(self, patch, seed):
        # cos(a + b + c) = Re(e^{ia} e^{ib} e^{ic}) splits the grid sum into
        # one matrix product
        dirs, phases = self.draw(make_rng(seed))
        dirs = dirs[:, :2]
        frame = patch.center.frame
        eta = self.mu * (dirs @ frame)
        phase0 = self.mu * (dirs @ patch.center.point[:2]) + phases
        axis = patch.axis
        rows = np.exp(1j * (phase0[None, :] + axis[:, None] * eta[None, :, 0]))
        cols = np.exp(1j * axis[:, None] * eta[None, :, 1])
        values = math.sqrt(2.0 / self.n_directions) * (rows @ cols.T).real
        return FieldSample(patch, values, self.to_dict(), seed)

    def oracle(self, r):
        return covariance_euclidean(self.dim, self.mu, r)

    def to_dict(self):
        return dict(type='EuclideanWave', mu=self.mu, dim=self.dim,
                    n_directions=self.n_directions)


@WAVES.register_module()
class BesselPolar(BaseWave):
    """Planar wave from its truncated polar Bessel expansion.

    ``F(r, t) = sum_{|n| <= N} c_n J_|n|(mu r) e^{int}`` with
    ``c_{-n} = conj(c_n)``, ``c_0`` real standard and ``c_n`` standard
    complex Gaussians. Polar coordinates are taken in the patch frame.
    """

    def __init__(self, mu=1.0, n_modes=32):
        if not mu > 0:
            raise ArgumentError(f'mu must be > 0, got {mu}')
        if int(n_modes) != n_modes or n_modes < 0:
            raise ArgumentError(f'n_modes must be an integer >= 0, got {n_modes}')
        self.mu = float(mu)
        self.n_modes = int(n_modes)
        self._checked_radius = None
        if self.n_modes < 8:
            _warn(f'BesselPolar with n_modes={self.n_modes} < 8 keeps only '
                  'the lowest angular modes')

    @property
    def width(self):
        return self.n_modes + 1

    def draw(self, rng):
        c0 = rng.standard_normal()
        c = rng.standard_normal((self.n_modes, 2)) / math.sqrt(2.0)
        return np.asarray(c0), c[:, 0] + 1j * c[:, 1]

    def check_truncation(self, r_max):
        """Warn when the first omitted term exceeds ``1e-8`` on the patch."""
        tail = abs(float(bessel_jn_all(self.n_modes + 1, self.mu * r_max)[-1]))
        if tail > 1e-8:
            _warn(f'Bessel series truncated at n_modes={self.n_modes}: '
                  f'|J_{self.n_modes + 1}({self.mu * r_max:.4g})| = {tail:.3e} '
                  '> 1e-8')
        return tail

    def evaluate(self, params, coords, center=None):
        c0, c = params
        coords = np.asarray(coords, dtype=float).reshape(-1, 2)
        r = np.hypot(coords[:, 0], coords[:, 1])
        theta = np.arctan2(coords[:, 1], coords[:, 0])
        r_max = float(r.max())
        if r_max != self._checked_radius:
            self._checked_radius = r_max
            self.check_truncation(r_max)
        jn = bessel_jn_all(self.n_modes, self.mu * r)
        out = c0[:, None] * jn[0][None, :]
        if self.n_modes:
            n = np.arange(1, self.n_modes + 1)
            waves = jn[1:] * np.exp(1j * n[:, None] * theta[None, :])
            out = out + 2.0 * (c @ waves).real
        return out

    def oracle(self, r):
        return covariance_euclidean(2, self.mu, r)

    def to_dict(self):
        return dict(type='BesselPolar', mu=self.mu, n_modes=self.n_modes)


@WAVES.register_module()
class HyperbolicWave(BaseWave):
    """Gaussian wave of the hyperbolic disc from boundary white noise.

    ``F(z) = Re[n^{-1/2} sum_k zeta_k exp((1/2 + is) <z, b_k>)]`` over
    equispaced boundary points ``b_k`` with complex Gaussian weights,
    ``E|zeta_k|^2 = 2``. Patch coordinates are geodesic normal coordinates
    at the patch center.
    """

    def __init__(self, s=1.0, n_boundary=256):
        if not s > 0:
            raise ArgumentError(f's must be > 0, got {s}')
        if int(n_boundary) != n_boundary or n_boundary < 32:
            raise ArgumentError(
                f'n_boundary must be an integer >= 32, got {n_boundary}')
        self.s = float(s)
        self.n_boundary = int(n_boundary)

    @property
    def width(self):
        return self.n_boundary

    def draw(self, rng):
        zeta = rng.standard_normal((self.n_boundary, 2))
        return (zeta[:, 0] + 1j * zeta[:, 1], )

    def disc_points(self, coords, center=None):
        coords = np.asarray(coords, dtype=float).reshape(-1, 2)
        if center is None:
            return from_normal_coordinates(coords)
        c = center.point[0] + 1j * center.point[1]
        return from_normal_coordinates(coords, c, center.angle)

    def evaluate(self, params, coords, center=None):
        zeta, = params
        z = self.disc_points(coords, center)
        b = boundary_point(2 * np.pi * np.arange(self.n_boundary) /
                           self.n_boundary)
        waves = np.exp((0.5 + 1j * self.s) * horocycle_bracket(
            z[:, None], b[None, :]))
        return (zeta @ waves.T).real / math.sqrt(self.n_boundary)

    def oracle(self, r):
        return spherical_function(self.s, r)

    def to_dict(self):
        return dict(type='HyperbolicWave', s=self.s,
                    n_boundary=self.n_boundary)


@WAVES.register_module()
class InvariantSine(BaseWave):
    """``sin(mu <e, x> + a)`` with a uniform direction ``e`` and phase ``a``.

    A random translation of a random rotation of ``sin``. It shares the
    covariance shape of the Euclidean wave, ``J_0(mu r) / 2``, but is not
    Gaussian.
    """

    width = 1

    def __init__(self, mu=1.0):
        if not mu > 0:
            raise ArgumentError(f'mu must be > 0, got {mu}')
        self.mu = float(mu)

    def draw(self, rng):
        angle = rng.uniform(0.0, 2 * math.pi)
        phase = rng.uniform(0.0, 2 * math.pi)
        return np.array([math.cos(angle), math.sin(angle)]), np.asarray(phase)

    def evaluate(self, params, coords, center=None):
        direction, phase = params
        x = _world(coords, center)
        return np.sin(self.mu * direction @ x.T + phase[:, None])

    def oracle(self, r):
        return 0.5 * covariance_euclidean(2, self.mu, r)

    def to_dict(self):
        return dict(type='InvariantSine', mu=self.mu)


def _warn(msg):
    print_log(msg, logger='bswaves', level=logging.WARNING)
    warnings.warn(msg, RuntimeWarning, stacklevel=3)


def _as_wave(spec, cls):
    if isinstance(spec, BaseWave):
        return spec
    cfg = dict(spec)
    cfg.setdefault('type', cls.__name__)
    return WAVES.build(cfg)


def sample_euclidean_wave(spec, patch, seed):
    """Sample an :class:`EuclideanWave` given as instance or config dict."""
    return _as_wave(spec, EuclideanWave).sample(patch, seed)


def sample_bessel_polar(mu, n_modes, patch, seed):
    return BesselPolar(mu, n_modes).sample(patch, seed)


def sample_hyperbolic_wave(spec, patch, seed):
    """Sample a :class:`HyperbolicWave` given as instance or config dict."""
    return _as_wave(spec, HyperbolicWave).sample(patch, seed)


def invariant_sine(patch, seed, mu=1.0):
    return InvariantSine(mu).sample(patch, seed)
