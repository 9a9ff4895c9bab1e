"""Covariance kernels of the monochromatic random waves.

Euclidean kernels are Bessel type. On the disc the kernel is the spherical
function ``phi_s``, the average over the boundary circle of
``exp((1/2 + is) <z, b>)``. Two quadratures evaluate it:

* for ``r <= r_switch`` the boundary average itself, by a composite
  trapezoid rule on the circle with node doubling;
* beyond, the equivalent Mehler-Dirichlet integral
  ``(sqrt 2 / pi) int_0^r cos(su) / sqrt(cosh r - cosh u) du`` after the
  substitution ``u = r - v**2``, which removes the endpoint singularity.
  The integrand is assembled in log-magnitude form so nothing underflows.
"""
import math

import numpy as np

from ..utils.bessel import bessel_j0
from ..utils.errors import ArgumentError, NumericError
from ..utils.quadrature import panel_rule

LOG2 = math.log(2.0)
TRAPEZOID_TOL = 1e-10
FAIL_TOL = 1e-9
MAX_NODES = 2**16
R_SWITCH = 3.0


def covariance_euclidean(dim, mu, r):
    """``E[F(x)F(y)]`` of the Euclidean wave at distance ``r``.

    ``J_0(mu r)`` in the plane and ``sin(mu r) / (mu r)`` in space.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ArgumentError('distances must be >= 0')
    if dim == 2:
        out = bessel_j0(mu * r)
    elif dim == 3:
        out = np.sinc(mu * r / np.pi)
    else:
        raise ArgumentError(f'no Euclidean kernel for dim={dim}')
    return out if out.ndim else float(out)


def _log_sinh(x):
    with np.errstate(over='ignore', divide='ignore'):
        return np.where(x > 20.0, x - LOG2 + np.log1p(-np.exp(-2.0 * x)),
                        np.log(np.sinh(np.minimum(x, 20.0))))


def _poisson_mean(s, t, log1mt2, theta):
    # 1 - 2t cos(theta) + t^2, written without cancellation at theta = 0
    den = (1.0 - t)[:, None]**2 + 4.0 * t[:, None] * np.sin(0.5 * theta)**2
    log_p = log1mt2[:, None] - np.log(den)
    return np.mean(np.exp(0.5 * log_p) * np.cos(s[:, None] * log_p), axis=-1)


def _boundary_average(s, r, chunk=256):
    t = np.tanh(0.5 * r)
    log1mt2 = np.log1p(-t * t)
    out = np.empty_like(s)
    for start in range(0, s.size, chunk):
        sl = slice(start, start + chunk)
        sc, tc, lc = s[sl], t[sl], log1mt2[sl]
        n = 16
        est = _poisson_mean(sc, tc, lc, 2 * np.pi * np.arange(n) / n)
        active = np.arange(sc.size)
        while active.size:
            theta = (2 * np.arange(n) + 1) * np.pi / n
            new = 0.5 * (est[active] +
                         _poisson_mean(sc[active], tc[active], lc[active], theta))
            diff = np.abs(new - est[active])
            est[active] = new
            n *= 2
            done = diff < TRAPEZOID_TOL
            if n >= MAX_NODES and not done.all():
                worst = float(diff[~done].max())
                if worst > FAIL_TOL:
                    k = active[~done][np.argmax(diff[~done])]
                    raise NumericError(
                        'boundary average of the spherical function did not '
                        'converge', s=float(sc[k]), r=float(r[start + k]),
                        error=worst, nodes=n, tol=FAIL_TOL)
                break
            active = active[~done]
        out[sl] = est
    return out


def _mehler_panels(s, r, panels, order):
    v, w = panel_rule(np.zeros_like(r), np.sqrt(r), panels, order)
    v2 = v * v
    log_den = 0.5 * (LOG2 + _log_sinh(r[:, None] - 0.5 * v2) +
                     _log_sinh(0.5 * v2))
    g = 2.0 * v * np.cos(s[:, None] * (r[:, None] - v2)) * np.exp(-log_den)
    return math.sqrt(2.0) / math.pi * np.sum(g * w, axis=-1)


def _mehler_dirichlet(s, r, chunk=2048, order=20, max_panels=4096):
    out = np.empty_like(s)
    perm = np.argsort(s * r, kind='stable')
    for start in range(0, s.size, chunk):
        idx = perm[start:start + chunk]
        sc, rc = s[idx], r[idx]
        panels = 4 + int(math.ceil(float(np.max(sc * rc)) / math.pi))
        probe = np.unique([np.argmax(sc * rc), np.argmax(rc)])
        while True:
            val = _mehler_panels(sc, rc, panels, order)
            check = _mehler_panels(sc[probe], rc[probe], 2 * panels, order)
            # tolerance relative to the envelope (1 + r) e^{-r/2} of phi_s
            scale = (1.0 + rc[probe]) * np.exp(-0.5 * rc[probe])
            err = float(np.max(np.abs(check - val[probe]) / scale))
            if err <= TRAPEZOID_TOL:
                break
            panels *= 2
            if panels > max_panels:
                raise NumericError(
                    'Mehler integral of the spherical function did not '
                    'converge', error=err, panels=panels, tol=TRAPEZOID_TOL)
        out[idx] = val
    return out


def spherical_function(s, r, r_switch=R_SWITCH):
    """Spherical function ``phi_s(r)`` of the hyperbolic plane.

    Eigenvalue ``1/4 + s**2``, normalized by ``phi_s(0) = 1``, even in ``s``.
    ``s`` and ``r`` broadcast against each other.

    Raises:
        ArgumentError: If some ``r < 0``.
        NumericError: If a quadrature misses its tolerance.
    """
    s_arr, r_arr = np.broadcast_arrays(
        np.abs(np.asarray(s, dtype=float)), np.asarray(r, dtype=float))
    if np.any(r_arr < 0):
        raise ArgumentError('distances must be >= 0')
    flat_s = s_arr.ravel()
    flat_r = r_arr.ravel()
    out = np.empty(flat_s.shape)
    near = flat_r <= r_switch
    if near.any():
        out[near] = _boundary_average(flat_s[near], flat_r[near])
    if (~near).any():
        out[~near] = _mehler_dirichlet(flat_s[~near], flat_r[~near])
    out = out.reshape(s_arr.shape)
    return out if out.ndim else float(out)


def hyperbolic_covariance(s, z, w):
    """``phi_s(d(z, w))`` for disc points ``z`` and ``w``."""
    from ..geometry.hyperbolic import disc_distance
    return spherical_function(s, disc_distance(z, w))
