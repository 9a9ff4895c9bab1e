"""Benjamini-Schramm sampling on the flat torus.

A random base point with a random frame is drawn from the normalized volume
and a function on the torus is pulled back to a Euclidean patch around it
at metric scale ``mu``.
"""
import math

import numpy as np

from ..utils.errors import ArgumentError, PreconditionError
from ..utils.seeding import make_rng
from ..utils.structures import FieldSample
from .frames import PointFrame
from .spaces import FlatTorus


def _check_torus(space):
    if not isinstance(space, FlatTorus):
        raise ArgumentError(
            f'BS sampling is defined on FlatTorus, got {type(space).__name__}')


def sample_base(space, seed):
    """Draw a volume-uniform point and a uniform frame angle."""
    _check_torus(space)
    rng = make_rng(seed)
    point = rng.uniform(0.0, space.side, size=2)
    angle = rng.uniform(0.0, 2 * math.pi)
    return PointFrame.from_angle(point, angle, space)


def sample_bases(space, n, seed):
    """Vectorized :func:`sample_base`: ``n`` points and angles from one stream.

    Returns:
        tuple[np.ndarray]: ``points`` of shape ``(n, 2)`` and ``angles`` of
            shape ``(n,)``.
    """
    _check_torus(space)
    rng = make_rng(seed)
    points = rng.uniform(0.0, space.side, size=(n, 2))
    angles = rng.uniform(0.0, 2 * math.pi, size=n)
    return points, angles


def rotations(angles):
    angles = np.asarray(angles, dtype=float)
    c, s = np.cos(angles), np.sin(angles)
    return np.stack([np.stack([c, -s], -1), np.stack([s, c], -1)], -2)


def lift_points(space, points, frames, coords, mu):
    """Torus points ``p + R u / mu`` for every base and every patch coordinate.

    Args:
        points (np.ndarray): ``(..., 2)`` base points.
        frames (np.ndarray): ``(..., 2, 2)`` frame matrices.
        coords (np.ndarray): ``(m, 2)`` frame coordinates.
        mu (float): Metric scale.

    Returns:
        np.ndarray: ``(..., m, 2)`` reduced torus points.
    """
    offsets = np.einsum('...ij,mj->...mi', frames, coords)
    offsets = offsets / mu
    return space.reduce(np.asarray(points)[..., None, :] + offsets)


def bs_lift(space, f, base, patch, mu, seed=None, spec=None):
    """Pull ``f`` back to ``patch`` around ``base`` at scale ``mu``.

    ``values[i, j] = f(base.point + R(frame) u_ij / mu)``.

    Raises:
        PreconditionError: If the patch does not inject into the rescaled
            torus, i.e. ``half_width > mu * side / 2``.
    """
    _check_torus(space)
    if not mu > 0:
        raise ArgumentError(f'scale mu must be > 0, got {mu}')
    if patch.half_width > mu * space.side / 2:
        raise PreconditionError(
            f'patch half width {patch.half_width} exceeds the injectivity '
            f'bound mu * L / 2 = {mu * space.side / 2}')
    n = patch.resolution
    coords = patch.coords.reshape(-1, 2)
    x = lift_points(space, base.point, base.frame, coords, mu)
    values = np.asarray(f(x), dtype=float).reshape(n, n)
    info = dict(type='bs_lift', mu=float(mu), side=float(space.side),
                base=base.to_dict())
    if spec is not None:
        info.update(spec)
    return FieldSample(patch, values, info, seed)


def bs_point_values(space, f, n, seed):
    """Values of ``f`` at ``n`` volume-uniform random points."""
    points, _ = sample_bases(space, n, seed)
    return np.asarray(f(points), dtype=float)
