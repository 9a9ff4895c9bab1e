"""Unit disc model of the curvature -1 hyperbolic plane."""
import numpy as np

from ..utils.errors import DomainError


def as_disc_point(z):
    """Return ``z`` as a complex array, accepting ``(..., 2)`` real input."""
    z = np.asarray(z)
    if not np.iscomplexobj(z) and z.ndim >= 1 and z.shape[-1] == 2:
        z = z[..., 0] + 1j * z[..., 1]
    return np.asarray(z, dtype=complex)


def check_in_disc(z):
    z = as_disc_point(z)
    if np.any(~np.isfinite(z)) or np.any(np.abs(z) >= 1.0):
        raise DomainError('points of the disc model must satisfy |z| < 1')
    return z


def disc_distance(z, w):
    """Hyperbolic distance ``2 artanh(|z - w| / |1 - conj(w) z|)``."""
    z = check_in_disc(z)
    w = check_in_disc(w)
    ratio = np.abs(z - w) / np.abs(1.0 - np.conj(w) * z)
    return 2.0 * np.arctanh(np.minimum(ratio, 1.0))


def mobius(z, c):
    """Disc isometry ``z -> (z + c) / (1 + conj(c) z)`` sending 0 to ``c``."""
    z = as_disc_point(z)
    c = as_disc_point(c)
    return (z + c) / (1.0 + np.conj(c) * z)


def from_normal_coordinates(u, center=0.0, angle=0.0):
    """Map geodesic normal coordinates ``u`` at ``center`` into the disc.

    The tangent vector ``u`` (rotated by the frame ``angle``) is sent to the
    point at hyperbolic distance ``|u|`` from ``center``.
    """
    u = np.asarray(u, dtype=float)
    radius = np.hypot(u[..., 0], u[..., 1])
    theta = np.arctan2(u[..., 1], u[..., 0]) + angle
    z0 = np.tanh(0.5 * radius) * np.exp(1j * theta)
    return mobius(z0, center)


def boundary_point(theta):
    return np.exp(1j * np.asarray(theta, dtype=float))


def horocycle_bracket(z, b):
    """``<z, b> = log[(1 - |z|^2) / |z - b|^2]`` for a boundary point ``b``.

    ``exp(<z, b>)`` is the Poisson kernel of the unit disc.
    """
    z = check_in_disc(z)
    b = as_disc_point(b)
    if np.any(np.abs(np.abs(b) - 1.0) > 1e-12):
        raise DomainError('boundary points must lie on the unit circle')
    return np.log1p(-np.abs(z)**2) - 2.0 * np.log(np.abs(z - b))
