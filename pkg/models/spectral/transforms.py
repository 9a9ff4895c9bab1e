"""Spherical transform pair of the hyperbolic plane.

Forward: ``k^(s) = 2 pi int_0^M k(r) phi_s(r) sinh(r) dr``, the eigenvalue
of convolution with ``k(d(., .))`` on ``phi_s``.

Inverse: ``k(r) = c int_0^oo k^(s) phi_s(r) p(s) ds`` with the Plancherel
density ``p(s) = s tanh(pi s)``. The constant ``c`` is calibrated on a
Gaussian reference transform and cross-checked against ``1 / (2 pi)``.
"""
import logging
import math
from collections import namedtuple
from functools import lru_cache

import numpy as np
from mmcv.utils import print_log

from ..geometry.hyperbolic import disc_distance, from_normal_coordinates
from ..utils.errors import ArgumentError, NumericError
from ..utils.quadrature import integrate_vec, panel_rule
from ..waves.kernels import spherical_function
from .radial import TabulatedKernel

PlancherelCalibration = namedtuple(
    'PlancherelCalibration',
    'constant spread reference theoretical rel_deviation')

CALIBRATION_TOL = 1e-4


def plancherel_density(s):
    s = np.asarray(s, dtype=float)
    return s * np.tanh(np.pi * s)


def gaussian_hat(s):
    return np.exp(-np.square(s))


def shifted_gaussian_hat(s):
    s = np.asarray(s, dtype=float)
    return np.exp(-(s - 1.0)**2) + np.exp(-(s + 1.0)**2)


# name -> (transform, s beyond which it is below 1e-15)
REFERENCE_HATS = dict(
    gaussian=(gaussian_hat, 6.0),
    shifted_gaussian=(shifted_gaussian_hat, 7.0))


def spherical_transform_h2(kernel, s, abs_tol=1e-9):
    """Spherical transform of a radial kernel, vectorized over ``s``.

    Raises:
        NumericError: If the adaptive quadrature misses ``abs_tol``.
    """
    s = np.asarray(s, dtype=float)
    flat = np.atleast_1d(s).ravel()

    def integrand(r):
        weight = 2 * math.pi * kernel(r) * math.sinh(r)
        if weight == 0:
            return np.zeros(flat.shape)
        return weight * spherical_function(flat, r)

    out = integrate_vec(integrand, 0.0, kernel.support, abs_tol=abs_tol,
                        name='spherical transform')
    out = np.asarray(out).reshape(s.shape)
    return out if out.ndim else float(out)


def _inverse_sum(hat, r, s_max, panels, order):
    s, w = panel_rule(0.0, s_max, panels, order)
    weights = hat(s) * plancherel_density(s) * w
    phi = spherical_function(s[None, :], r[:, None])
    return phi @ weights


def inverse_transform_h2(hat, r, s_max, constant=None, order=20, tol=1e-10,
                         max_panels=2048):
    """Kernel ``k(r)`` whose spherical transform is ``hat``.

    Args:
        hat (callable): Even transform ``s -> k^(s)``, vectorized,
            negligible beyond ``s_max``.
        r (array_like): Radii to evaluate at.
        s_max (float): Truncation of the spectral integral.
        constant (float, optional): Plancherel constant, calibrated by
            default.

    Raises:
        NumericError: If refining the spectral quadrature does not settle.
    """
    if not s_max > 0:
        raise ArgumentError(f's_max must be > 0, got {s_max}')
    if constant is None:
        constant = plancherel_constant()
    r = np.asarray(r, dtype=float)
    flat = np.atleast_1d(r).ravel()
    if np.any(flat < 0):
        raise ArgumentError('radii must be >= 0')
    panels = 8 + int(math.ceil(s_max * float(flat.max()) / (2 * math.pi)))
    probe = flat[np.unique(np.linspace(0, flat.size - 1, min(flat.size, 16))
                           .astype(int))]
    while True:
        coarse = _inverse_sum(hat, probe, s_max, panels, order)
        fine = _inverse_sum(hat, probe, s_max, 2 * panels, order)
        scale = (1.0 + probe) * np.exp(-0.5 * probe)
        err = float(np.max(np.abs(fine - coarse) / scale))
        if err <= tol:
            break
        panels *= 2
        if panels > max_panels:
            raise NumericError('inverse spherical transform did not converge',
                               error=err, panels=panels, tol=tol)
    out = constant * _inverse_sum(hat, flat, s_max, panels, order)
    out = out.reshape(r.shape)
    return out if out.ndim else float(out)


def inverse_kernel(hat, s_max, r_max, step=0.02, constant=None, name='inverse'):
    """Tabulate the inverse transform on ``[0, r_max]`` as a spline kernel."""
    n = int(math.ceil(r_max / step - 1e-9)) + 1
    r = np.linspace(0.0, r_max, n)
    values = inverse_transform_h2(hat, r, s_max, constant=constant)
    return TabulatedKernel(r, values, name=name)


@lru_cache(maxsize=None)
def calibrate_plancherel(reference='gaussian', r_max=12.0,
                         s_test=(0.0, 0.5, 1.0, 1.5)):
    """Fit the Plancherel constant on a reference transform.

    The reference hat is inverted with constant 1, the resulting kernel is
    transformed back, and ``hat / back`` is the constant. Its spread over
    the test points measures the round-trip consistency.

    Returns:
        PlancherelCalibration

    Raises:
        NumericError: If the spread exceeds ``1e-4`` relative.
    """
    if reference not in REFERENCE_HATS:
        raise ArgumentError(f'unknown reference transform {reference!r}')
    hat, s_max = REFERENCE_HATS[reference]
    kernel = inverse_kernel(hat, s_max, r_max, constant=1.0, name=reference)
    s_test = np.asarray(s_test, dtype=float)
    back = spherical_transform_h2(kernel, s_test)
    ratios = hat(s_test) / back
    constant = float(ratios.mean())
    spread = float(np.max(np.abs(ratios - constant)) / abs(constant))
    theoretical = 1.0 / (2 * math.pi)
    result = PlancherelCalibration(
        constant, spread, reference, theoretical,
        abs(constant - theoretical) / theoretical)
    if spread > CALIBRATION_TOL:
        raise NumericError('Plancherel calibration is not consistent',
                           spread=spread, tol=CALIBRATION_TOL,
                           reference=reference)
    print_log(
        f'Plancherel constant {constant:.10f} from {reference} '
        f'(1/(2 pi) = {theoretical:.10f}, spread {spread:.2e})',
        logger='bswaves', level=logging.DEBUG)
    return result


def plancherel_constant():
    return calibrate_plancherel().constant


def round_trip_error(hat, s_grid, s_max, r_max=12.0, constant=None):
    """``max |transform(inverse(hat)) - hat|`` over ``s_grid``."""
    kernel = inverse_kernel(hat, s_max, r_max, constant=constant)
    s_grid = np.asarray(s_grid, dtype=float)
    back = spherical_transform_h2(kernel, s_grid)
    return float(np.max(np.abs(back - hat(s_grid))))


def disc_convolve(kernel, s, z, panels=8, order=20, n_angular=128):
    """``(k * phi_s)(z)`` by quadrature in geodesic polar coordinates at ``z``.

    ``int_0^M int_0^2pi k(rho) phi_s(d(0, w(rho, t))) sinh(rho) dt drho``.
    """
    z = complex(z)
    rho, w = panel_rule(0.0, kernel.support, panels, order)
    theta = 2 * np.pi * np.arange(n_angular) / n_angular
    u = rho[:, None, None] * np.stack([np.cos(theta), np.sin(theta)], -1)[None]
    points = from_normal_coordinates(u, center=z)
    phi = spherical_function(s, disc_distance(points, 0.0))
    ring = phi.mean(axis=1) * 2 * np.pi
    return float(np.sum(w * kernel(rho) * np.sinh(rho) * ring))
