import math
from dataclasses import dataclass, field

import numpy as np

from ..utils.errors import ArgumentError
from .spaces import FlatTorus


@dataclass(frozen=True, eq=False)
class PointFrame:
    """A base point together with an orthonormal frame.

    Args:
        point (array_like): Coordinates of the point. Disc points are given
            as ``(x, y)`` with ``x + iy`` inside the unit disc.
        frame (array_like): ``(d, d)`` orthonormal matrix whose columns are
            the frame axes. Only rotations are used in 2D.
        space (optional): Space of the point. Torus points are reduced to
            the fundamental domain.
    """
    point: np.ndarray
    frame: np.ndarray
    space: object = field(default=None, repr=False)

    def __post_init__(self):
        point = np.array(self.point, dtype=float).reshape(-1)
        frame = np.array(self.frame, dtype=float)
        if isinstance(self.space, FlatTorus):
            point = self.space.reduce(point)
        d = point.shape[0]
        if frame.shape != (d, d):
            raise ArgumentError(
                f'frame of shape {frame.shape} does not fit a point of '
                f'dimension {d}')
        if not np.allclose(frame.T @ frame, np.eye(d), atol=1e-12):
            raise ArgumentError('frame must be orthonormal')
        point.setflags(write=False)
        frame.setflags(write=False)
        object.__setattr__(self, 'point', point)
        object.__setattr__(self, 'frame', frame)

    @classmethod
    def from_angle(cls, point=(0.0, 0.0), angle=0.0, space=None):
        c, s = math.cos(angle), math.sin(angle)
        return cls(point, [[c, -s], [s, c]], space)

    @property
    def dim(self):
        return self.point.shape[0]

    @property
    def angle(self):
        assert self.dim == 2
        return math.atan2(self.frame[1, 0], self.frame[0, 0]) % (2 * math.pi)

    def to_dict(self):
        return dict(point=self.point.tolist(), frame=self.frame.tolist())


@dataclass(frozen=True, eq=False)
class PatchGrid:
    """Square grid ``[-half_width, half_width]^2`` in frame coordinates."""
    center: PointFrame
    half_width: float
    resolution: int

    def __post_init__(self):
        if not self.half_width > 0:
            raise ArgumentError(
                f'half_width must be > 0, got {self.half_width}')
        if int(self.resolution) != self.resolution or self.resolution < 2:
            raise ArgumentError(
                f'resolution must be an integer >= 2, got {self.resolution}')
        object.__setattr__(self, 'resolution', int(self.resolution))

    @classmethod
    def centered(cls, half_width, resolution, point=(0.0, 0.0), angle=0.0):
        return cls(PointFrame.from_angle(point, angle), half_width, resolution)

    @property
    def axis(self):
        return np.linspace(-self.half_width, self.half_width, self.resolution)

    @property
    def spacing(self):
        return 2 * self.half_width / (self.resolution - 1)

    @property
    def area(self):
        return (2 * self.half_width)**2

    @property
    def coords(self):
        """``(n, n, 2)`` frame coordinates, ``coords[i, j] = (axis[i], axis[j])``."""
        u1, u2 = np.meshgrid(self.axis, self.axis, indexing='ij')
        return np.stack([u1, u2], axis=-1)

    def to_dict(self):
        return dict(
            center=self.center.to_dict(),
            half_width=self.half_width,
            resolution=self.resolution)

    @classmethod
    def from_dict(cls, d):
        center = PointFrame(d['center']['point'], d['center']['frame'])
        return cls(center, d['half_width'], d['resolution'])


@dataclass(frozen=True, eq=False)
class RadialProbe:
    """Points on rays through the frame origin, for two-point statistics.

    Point ``k * n_rays + l`` sits at ``radii[k]`` on the ray of angle
    ``2 pi l / n_rays + offset``. ``edges`` bins the distances so that each
    radius gets its own bin.
    """
    center: PointFrame
    radii: np.ndarray
    n_rays: int = 2
    offset: float = 0.0

    def __post_init__(self):
        radii = np.array(self.radii, dtype=float).reshape(-1)
        if radii.size == 0 or np.any(radii < 0) or np.any(np.diff(radii) <= 0):
            raise ArgumentError('probe radii must be nonnegative and increasing')
        if self.n_rays < 1:
            raise ArgumentError('a probe needs at least one ray')
        radii.setflags(write=False)
        object.__setattr__(self, 'radii', radii)

    @property
    def coords(self):
        angles = self.offset + 2 * np.pi * np.arange(self.n_rays) / self.n_rays
        rays = np.stack([np.cos(angles), np.sin(angles)], axis=-1)
        return (self.radii[:, None, None] * rays[None]).reshape(-1, 2)

    @property
    def edges(self):
        mids = 0.5 * (self.radii[1:] + self.radii[:-1])
        if self.radii.size == 1:
            step = max(self.radii[0], 1.0)
        else:
            step = self.radii[-1] - mids[-1]
        first = self.radii[0] - (mids[0] - self.radii[0] if mids.size else step)
        return np.concatenate([[min(first, -1e-12)], mids, [self.radii[-1] + step]])
