import math
from dataclasses import dataclass

import numpy as np

from ..utils.errors import ArgumentError
from .hyperbolic import disc_distance


@dataclass(frozen=True)
class Euclidean:
    """Euclidean space ``R^dim``."""
    dim: int = 2

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < 1:
            raise ArgumentError(f'Euclidean dim must be >= 1, got {self.dim}')

    def distance(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return np.linalg.norm(x - y, axis=-1)

    def eigenvalue(self, mu):
        return mu**2


@dataclass(frozen=True)
class HyperbolicDisc:
    """Unit disc with curvature -1; ``rho`` is fixed to 1/2."""
    dim = 2
    rho = 0.5

    def distance(self, z, w):
        return disc_distance(z, w)

    def eigenvalue(self, s):
        return self.rho**2 + np.square(s)

    def ball_volume(self, r):
        # 2 pi (cosh r - 1) written without cancellation near 0
        return 4.0 * np.pi * np.sinh(0.5 * np.asarray(r, dtype=float))**2


@dataclass(frozen=True)
class FlatTorus:
    """Square torus ``R^2 / (side Z)^2``."""
    side: float = 2 * math.pi
    dim = 2

    def __post_init__(self):
        if not self.side > 0 or not math.isfinite(self.side):
            raise ArgumentError(f'torus side must be > 0, got {self.side}')

    @property
    def area(self):
        return self.side**2

    @property
    def dual_spacing(self):
        return 2 * math.pi / self.side

    def reduce(self, x):
        return np.mod(np.asarray(x, dtype=float), self.side)

    def distance(self, x, y):
        d = np.abs(self.reduce(x) - self.reduce(y))
        d = np.minimum(d, self.side - d)
        return np.linalg.norm(d, axis=-1)

    def eigenvalue(self, xi):
        """Eigenvalue ``|xi|^2`` of the integer dual vector ``xi``."""
        xi = np.asarray(xi, dtype=float)
        return self.dual_spacing**2 * np.sum(xi**2, axis=-1)


def distance(space, x, y):
    """Distance between ``x`` and ``y`` in ``space``."""
    return space.distance(x, y)


def rescale_metric(space, r):
    """Multiply every distance of ``space`` by ``r``.

    Eigenvalues scale by ``1 / r**2``. The disc has fixed curvature and
    cannot be rescaled within its model.
    """
    if not r > 0:
        raise ArgumentError(f'rescaling factor must be > 0, got {r}')
    if isinstance(space, FlatTorus):
        return FlatTorus(side=r * space.side)
    if isinstance(space, Euclidean):
        return space
    raise ArgumentError(f'{type(space).__name__} cannot be rescaled')


SPACES = dict(
    euclidean=Euclidean, hyperbolic=HyperbolicDisc, torus=FlatTorus)


def build_space(cfg):
    cfg = dict(cfg)
    kind = cfg.pop('type')
    if kind not in SPACES:
        raise ArgumentError(f'unknown space {kind!r}')
    return SPACES[kind](**cfg)
