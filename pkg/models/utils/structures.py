from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError
from .seeding import check_seed


@dataclass(frozen=True, eq=False)
class FieldSample:
    """One realization of a random field on a framed grid patch.

    Args:
        patch (PatchGrid): Grid the values live on.
        values (np.ndarray): ``(resolution, resolution)`` matrix, row ``i``
            following the frame's first axis.
        spec (dict): Descriptor of whatever produced the values; for the
            wave samplers it is the registry config, so
            ``build_wave(spec).sample(patch, seed)`` regenerates the sample.
        seed (int, optional): 64-bit seed of the realization.
    """
    patch: object
    values: np.ndarray
    spec: dict = field(default_factory=dict)
    seed: int = None

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        n = self.patch.resolution
        if values.shape != (n, n):
            raise ArgumentError(
                f'values of shape {values.shape} do not match a patch of '
                f'resolution {n}')
        if not np.all(np.isfinite(values)):
            raise ArgumentError('field sample values must be finite')
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)
        if self.seed is not None:
            object.__setattr__(self, 'seed', check_seed(self.seed))
        object.__setattr__(self, 'spec', dict(self.spec))

    @property
    def shape(self):
        return self.values.shape

    def rows(self):
        """Yield ``(u1, u2, value)`` in row-major order."""
        axis = self.patch.axis
        for i, u1 in enumerate(axis):
            for j, u2 in enumerate(axis):
                yield float(u1), float(u2), float(self.values[i, j])

    def to_dict(self):
        return dict(
            patch=self.patch.to_dict(),
            spec=self.spec,
            seed=self.seed,
            values=self.values.tolist())
