"""Spherical transform of the normalized ball indicator.

``h_t(s) = vol(B_t)^{-1/2} int_{B_t} phi_s = 2 pi I_t(s) / sqrt(vol(B_t))``
with ``I_t(s) = int_0^t sinh(u) phi_s(u) du`` and
``vol(B_t) = 2 pi (cosh t - 1)``.

For large ``t``, ``phi_s(u) sinh(u)`` behaves like ``Re(B e^{(1/2 + is) u})``
so that ``I_t`` approaches ``Re(B w_t) + C`` with
``w_t = e^{(1/2 + is) t} / (1/2 + is)``; the remainder is ``O(e^{-3t/2})``.
"""
import logging
import math
from collections import namedtuple

import numpy as np
from mmcv.utils import print_log

from ..utils.errors import ArgumentError, NumericError
from ..utils.quadrature import panel_rule
from ..waves.kernels import spherical_function

PropagatorBound = namedtuple('PropagatorBound', 's horizons averages constant')
AsymptoticFit = namedtuple(
    'AsymptoticFit', 's B offset t residual scaled_residual')

RHO = 0.5
ASYMPTOTIC_FROM = 5.0


def ball_volume(t):
    t = np.asarray(t, dtype=float)
    return 4.0 * np.pi * np.sinh(0.5 * t)**2


def _cumulative(edges, s, order):
    x, w = panel_rule(edges[:-1], edges[1:], 1, order)
    f = np.sinh(x) * spherical_function(s, x)
    return np.concatenate([[0.0], np.cumsum(np.sum(f * w, axis=-1))])


def ball_integral(t, s, tol=1e-9):
    """``I_t(s)`` for an array of ``t``, by one cumulative sweep.

    Segments are at most ``min(1/2, pi / (2 s))`` long; the order 24 sweep
    is checked against order 12 on the scale of ``h_t``.
    """
    t = np.asarray(t, dtype=float)
    flat = np.atleast_1d(t).ravel()
    if np.any(flat <= 0):
        raise ArgumentError('t must be > 0')
    s = abs(float(s))
    step = 0.5 if s == 0 else min(0.5, math.pi / (2 * s))
    top = float(flat.max())
    grid = np.arange(0.0, top, step)
    edges = np.unique(np.concatenate([grid, flat, [top]]))
    fine = _cumulative(edges, s, 24)
    coarse = _cumulative(edges, s, 12)
    idx = np.searchsorted(edges, flat)
    scale = np.sqrt(ball_volume(flat)) / (2 * np.pi)
    err = float(np.max(np.abs(fine[idx] - coarse[idx]) / scale))
    if err > tol:
        raise NumericError('ball integral did not converge', error=err,
                           tol=tol, segments=edges.size - 1)
    out = fine[idx].reshape(t.shape)
    return out if out.ndim else float(out)


def propagator_eigenvalue(t, s):
    """``h_t(s)``, vectorized over ``t``."""
    integral = np.asarray(ball_integral(t, s))
    out = 2 * np.pi * integral / np.sqrt(ball_volume(t))
    return out if out.ndim else float(out)


def propagator_time_average(s, horizon, order=20, tol=1e-8):
    """``(1 / T) int_0^T h_t(s)**2 dt`` with panel doubling."""
    if not horizon > 0:
        raise ArgumentError(f'horizon must be > 0, got {horizon}')
    panels = 2 * int(math.ceil(horizon * max(abs(s), 1.0) / math.pi))
    previous = None
    for _ in range(6):
        t, w = panel_rule(0.0, horizon, panels, order)
        value = float(np.sum(w * propagator_eigenvalue(t, s)**2)) / horizon
        if previous is not None and abs(value - previous) <= tol:
            return value
        previous = value
        panels *= 2
    raise NumericError('time average did not converge', panels=panels,
                       tol=tol, s=s, horizon=horizon)


def propagator_lower_bound(s, horizons=(10, 20, 30, 40, 50)):
    """Time averages over several horizons and their minimum.

    Returns:
        PropagatorBound: ``constant`` is the smallest average.
    """
    averages = np.array([propagator_time_average(s, T) for T in horizons])
    bound = PropagatorBound(float(s), tuple(float(T) for T in horizons),
                            averages, float(averages.min()))
    print_log(f'propagator s={s:g}: min time average {bound.constant:.4f}',
              logger='bswaves', level=logging.INFO)
    return bound


def propagator_asymptotic(t, s):
    """Leading oscillation ``(cos(s rho t) + s sin(s rho t)) / ((1 + s^2) rho)``.

    Only meaningful in the asymptotic regime ``t >= 5``.
    """
    t = np.asarray(t, dtype=float)
    if np.any(t < ASYMPTOTIC_FROM):
        raise ArgumentError(
            f'asymptotic form needs t >= {ASYMPTOTIC_FROM}, got {t.min()}')
    phase = s * RHO * t
    out = (np.cos(phase) + s * np.sin(phase)) / ((1 + s * s) * RHO)
    return out if out.ndim else float(out)


def fit_propagator_asymptotic(s, t=None):
    """Fit ``I_t(s) ~ Re(B w_t) + C`` on ``t in [5, 15]``.

    Rows are scaled by ``e^{-t/2}`` so that every ``t`` weighs alike.
    ``scaled_residual`` is ``max |I_t - fit| e^{t/2}``.

    Note that ``propagator_asymptotic(t, 2 s) == Re(w_t) e^{-t/2}``, so the
    closed form is the fitted shape with ``B = 1``.
    """
    if t is None:
        t = np.linspace(ASYMPTOTIC_FROM, 15.0, 201)
    t = np.asarray(t, dtype=float)
    if np.any(t < ASYMPTOTIC_FROM):
        raise ArgumentError(f'fit needs t >= {ASYMPTOTIC_FROM}')
    damp = np.exp(-0.5 * t)
    w = np.exp((0.5 + 1j * s) * t) / (0.5 + 1j * s) * damp
    design = np.stack([w.real, -w.imag, damp], axis=-1)
    target = np.asarray(ball_integral(t, s)) * damp
    coef, *_ = np.linalg.lstsq(design, target, rcond=None)
    residual = (target - design @ coef) / damp
    return AsymptoticFit(float(s), complex(coef[0], coef[1]), float(coef[2]),
                         t, residual,
                         float(np.max(np.abs(residual) * np.exp(0.5 * t))))
