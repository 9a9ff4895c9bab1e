"""Compactly supported kernels whose transform approximates a window bump.

``chi_delta`` is a smooth bump in the spectral parameter, equal to 1 on
``| |s| - s0 | <= delta`` and vanishing beyond ``2 delta``. Its inverse
transform ``k_delta`` is rapidly decreasing but not compactly supported;
multiplying it by ``bump(r / r_cut)`` gives a kernel supported in the ball
of radius ``r_cut`` whose transform is close to ``chi_delta``.
"""
import logging
import math
from collections import namedtuple

import numpy as np
from mmcv.utils import print_log

from ..utils.errors import ArgumentError
from .radial import TruncatedKernel, bump
from .transforms import inverse_kernel, spherical_transform_h2

CutoffResult = namedtuple(
    'CutoffResult', 'kernel s_grid hat target deviation r_cut delta lambda0')


def spectral_parameter(lambda0):
    """``s`` with ``1/4 + s**2 = lambda0``."""
    if not lambda0 > 0.25:
        raise ArgumentError(
            f'lambda0 must be > 1/4 on the disc, got {lambda0}')
    return math.sqrt(lambda0 - 0.25)


def chi_delta(s, delta, lambda0):
    """Even smooth bump around ``s0 = sqrt(lambda0 - 1/4)``."""
    if not delta > 0:
        raise ArgumentError(f'delta must be > 0, got {delta}')
    s0 = spectral_parameter(lambda0)
    out = bump((np.abs(np.asarray(s, dtype=float)) - s0) / (2.0 * delta))
    return out if out.ndim else float(out)


def cutoff_profile(delta, lambda0, r_max, step=0.05):
    """Tabulated inverse transform ``k_delta`` of ``chi_delta`` on ``[0, r_max]``."""
    s_max = spectral_parameter(lambda0) + 2.0 * delta
    return inverse_kernel(lambda s: chi_delta(s, delta, lambda0), s_max,
                          r_max, step=step, name=f'k_delta({delta:g})')


def cutoff_kernel(delta, r_cut, lambda0, profile=None, n_grid=161,
                  abs_tol=1e-9):
    """Truncated kernel ``F = k_delta * bump(r / r_cut)`` and its deviation.

    Args:
        delta (float): Half-width of the plateau of ``chi_delta``.
        r_cut (float): Support radius of ``F``.
        lambda0 (float): Window center, ``lambda0 > 1/4``.
        profile (TabulatedKernel, optional): Precomputed ``k_delta`` on at
            least ``[0, r_cut]``; shared across radii by
            :func:`cutoff_deviation_curve`.
        n_grid (int): Size of the ``s`` grid on ``[0, s0 + 2 delta + 1]``.

    Returns:
        CutoffResult: ``deviation`` is ``max |F^ - chi_delta|`` on the grid.
    """
    if not r_cut > 0:
        raise ArgumentError(f'r_cut must be > 0, got {r_cut}')
    if profile is None:
        profile = cutoff_profile(delta, lambda0, r_cut)
    if profile.support < r_cut:
        raise ArgumentError(
            f'profile tabulated up to {profile.support}, needs {r_cut}')
    kernel = TruncatedKernel(profile, r_cut)
    s0 = spectral_parameter(lambda0)
    s_grid = np.linspace(0.0, s0 + 2.0 * delta + 1.0, n_grid)
    hat = spherical_transform_h2(kernel, s_grid, abs_tol=abs_tol)
    target = chi_delta(s_grid, delta, lambda0)
    deviation = float(np.max(np.abs(hat - target)))
    return CutoffResult(kernel, s_grid, hat, target, deviation, float(r_cut),
                        float(delta), float(lambda0))


def cutoff_deviation_curve(delta, r_cuts, lambda0, **kwargs):
    """:func:`cutoff_kernel` along increasing ``r_cuts`` with one profile."""
    r_cuts = sorted(float(r) for r in r_cuts)
    profile = cutoff_profile(delta, lambda0, r_cuts[-1])
    results = []
    for r_cut in r_cuts:
        res = cutoff_kernel(delta, r_cut, lambda0, profile=profile, **kwargs)
        print_log(
            f'cutoff delta={delta:g} r_cut={r_cut:g}: '
            f'deviation {res.deviation:.3e}',
            logger='bswaves', level=logging.INFO)
        results.append(res)
    return results
