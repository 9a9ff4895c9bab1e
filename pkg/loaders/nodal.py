import math
from collections import namedtuple

import numpy as np
from scipy import ndimage

from models.utils import ArgumentError, PreconditionError

NodalReport = namedtuple(
    'NodalReport', 'domain_count boundary_touching patch_area count_density')
NODAL_FIELDS = ('count', 'touching', 'area', 'density')

ZERO_SHIFT = 1e-12
MIN_NODES_PER_WAVELENGTH = 10
FOUR_CONNECTED = ndimage.generate_binary_structure(2, 1)


def sign_pattern(values):
    """Positive set of a grid, exact zeros moved to ``+1e-12`` first."""
    values = np.asarray(values, dtype=float)
    return np.where(values == 0, ZERO_SHIFT, values) > 0


def _touching(labels):
    border = np.concatenate(
        [labels[0], labels[-1], labels[1:-1, 0], labels[1:-1, -1]])
    return np.unique(border[border > 0]).size


def count_sign_domains(signs):
    """Components of both sign sets under 4-connectivity.

    Returns:
        tuple[int]: ``(count, boundary_touching)``.
    """
    signs = np.asarray(signs, dtype=bool)
    count = touching = 0
    for mask in (signs, ~signs):
        labels, n = ndimage.label(mask, structure=FOUR_CONNECTED)
        count += n
        touching += _touching(labels)
    return count, touching


def nodal_count(sample, mu=None):
    """Nodal domains of a field sample on its grid patch.

    The density ``(count - touching / 2) / area`` counts domains cut by the
    patch boundary with weight one half.

    Args:
        sample (FieldSample): Values on a patch grid.
        mu (float, optional): Frequency of the field. When given, the grid
            must carry at least 10 nodes per wavelength ``2 pi / mu``.

    Raises:
        PreconditionError: For an all-zero sample or a grid too coarse for
            ``mu``.
    """
    values = sample.values
    if not np.any(values):
        raise PreconditionError('nodal domains of the zero field are undefined')
    if mu is not None:
        if not mu > 0:
            raise ArgumentError(f'mu must be > 0, got {mu}')
        nodes = 2 * math.pi / mu / sample.patch.spacing
        if nodes < MIN_NODES_PER_WAVELENGTH:
            raise PreconditionError(
                f'{nodes:.1f} grid nodes per wavelength, need '
                f'{MIN_NODES_PER_WAVELENGTH}')
    count, touching = count_sign_domains(sign_pattern(values))
    area = sample.patch.area
    return NodalReport(count, touching, area, (count - 0.5 * touching) / area)


def nodal_statistics(reports):
    """Mean and standard error of the count densities of several patches."""
    density = np.array([r.count_density for r in reports], dtype=float)
    if density.size < 2:
        raise PreconditionError('need at least two nodal reports')
    return float(density.mean()), float(density.std(ddof=1) /
                                         math.sqrt(density.size))


class UnionFind:
    """Disjoint sets over ``range(size)`` with path compression."""

    def __init__(self, size):
        self.parents = list(range(size))
        self.num_components = size

    def find(self, elem):
        root = elem
        while root != self.parents[root]:
            root = self.parents[root]
        while elem != root:
            self.parents[elem], elem = root, self.parents[elem]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parents[rb] = ra
            self.num_components -= 1


def union_find_domains(signs):
    """Reference counter for :func:`count_sign_domains`, one grid cell at a time."""
    signs = np.asarray(signs, dtype=bool)
    n, m = signs.shape
    uf = UnionFind(n * m)
    for i in range(n):
        for j in range(m):
            if i + 1 < n and signs[i, j] == signs[i + 1, j]:
                uf.union(i * m + j, (i + 1) * m + j)
            if j + 1 < m and signs[i, j] == signs[i, j + 1]:
                uf.union(i * m + j, i * m + j + 1)
    border = set()
    for i in range(n):
        for j in range(m):
            if i in (0, n - 1) or j in (0, m - 1):
                border.add(uf.find(i * m + j))
    return uf.num_components, len(border)
