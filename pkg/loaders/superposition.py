"""Random unit-sphere superpositions of window eigenfunctions.

A draw picks ``c`` with i.i.d. ``N(0, 1/k)`` entries, normalizes it to the
unit sphere and forms ``F = sum_j c_j phi_j``, which has unit norm for the
probability measure. ``F`` is read through a BS lift at scale
``mu = sqrt(lambda0)``.

Two randomizations are exposed. In ``beta`` mode every draw takes a fresh
function and a fresh base point. In ``alpha`` mode each function is read
from ``n_reads`` base points before the next function is drawn. Both have
the same mean embedding, so their covariance estimates agree.
"""
import math
from collections import namedtuple
from dataclasses import dataclass

import numpy as np
from scipy import stats
from torch.utils.data import Dataset

from models.geometry import (PatchGrid, bs_lift, lift_points, rotations,
                             sample_base, sample_bases)
from models.spectral import TorusEigenbasis
from models.utils import (ArgumentError, PreconditionError, make_rng,
                          spawn_seed)
from models.waves import covariance_euclidean
from .builder import DATASETS, build_dataloader
from .metrics import Metric_Covariance

KernelDistance = namedtuple('KernelDistance', 'radii per_radius mean')
ModeComparison = namedtuple('ModeComparison', 'max_difference max_z')


@dataclass(frozen=True, eq=False)
class SuperpositionSpec:
    """Parameters of a superposition process.

    Args:
        basis (TorusEigenbasis): Nonempty window basis.
        n_draws (int): Number of lifted samples.
        patch (PatchGrid): Patch the samples are read on.
        seed (int): Root seed.
        mode (str): 'beta' or 'alpha'.
        n_reads (int): Base points per function in 'alpha' mode.
    """
    basis: TorusEigenbasis
    n_draws: int
    patch: PatchGrid
    seed: int
    mode: str = 'beta'
    n_reads: int = 16

    def __post_init__(self):
        if not isinstance(self.basis, TorusEigenbasis) or not len(self.basis):
            raise PreconditionError('superpositions need a nonempty basis')
        if int(self.n_draws) != self.n_draws or self.n_draws < 1:
            raise ArgumentError(f'n_draws must be >= 1, got {self.n_draws}')
        if self.mode not in ('alpha', 'beta'):
            raise ArgumentError(f"mode must be 'alpha' or 'beta', got "
                                f'{self.mode!r}')
        if self.n_reads < 1:
            raise ArgumentError(f'n_reads must be >= 1, got {self.n_reads}')

    @property
    def scale(self):
        return math.sqrt(self.basis.window.lambda0)

    @property
    def k(self):
        return len(self.basis)

    def function_index(self, draw):
        return draw // self.n_reads if self.mode == 'alpha' else draw

    def coefficient_seed(self, draw):
        return spawn_seed(self.seed, 2 * self.function_index(draw))

    def base_seed(self, draw):
        return spawn_seed(self.seed, 2 * draw + 1)

    def to_dict(self):
        return dict(window=self.basis.window.to_dict(),
                    side=self.basis.space.side, k=self.k,
                    n_draws=int(self.n_draws), patch=self.patch.to_dict(),
                    seed=self.seed, mode=self.mode, n_reads=self.n_reads)


def draw_coefficients(k, rng):
    """Uniform point of the unit sphere in ``R^k``."""
    c = rng.normal(0.0, math.sqrt(1.0 / k), size=k)
    return c / np.linalg.norm(c)


def sample_superposition(spec, draw=0):
    """The ``draw``-th lifted superposition as a :class:`FieldSample`."""
    if not 0 <= draw < spec.n_draws:
        raise ArgumentError(f'draw {draw} outside [0, {spec.n_draws})')
    basis = spec.basis
    coeffs = draw_coefficients(spec.k, make_rng(spec.coefficient_seed(draw)))
    base = sample_base(basis.space, spec.base_seed(draw))
    return bs_lift(basis.space, lambda x: basis.combine(coeffs, x), base,
                   spec.patch, spec.scale, seed=spec.base_seed(draw),
                   spec=dict(source='superposition', mode=spec.mode,
                             draw=int(draw)))


def superposition_values(spec, coords, start, count):
    """Values of draws ``[start, start + count)`` at patch coordinates."""
    basis = spec.basis
    draws = range(start, start + count)
    coeffs = np.stack([
        draw_coefficients(spec.k, make_rng(spec.coefficient_seed(i)))
        for i in draws
    ])
    bases = [sample_bases(basis.space, 1, spec.base_seed(i)) for i in draws]
    points = np.concatenate([p for p, _ in bases])
    frames = rotations(np.concatenate([a for _, a in bases]))
    x = lift_points(basis.space, points, frames, coords, spec.scale)
    return np.einsum('nk,knm->nm', coeffs, basis.evaluate(x))


@DATASETS.register_module()
class SuperpositionDataset(Dataset):
    """Superposition values at fixed patch coordinates, ``chunk`` draws per item."""

    def __init__(self, spec, coords, chunk=256):
        self.spec = spec
        self.coords = np.asarray(coords, dtype=float).reshape(-1, 2)
        self.chunk = int(chunk)

    def __len__(self):
        return int(math.ceil(self.spec.n_draws / self.chunk))

    def __getitem__(self, idx):
        if not 0 <= idx < len(self):
            raise IndexError(idx)
        start = idx * self.chunk
        count = min(self.chunk, self.spec.n_draws - start)
        return dict(index=idx, start=start,
                    values=superposition_values(self.spec, self.coords, start,
                                                count))


def superposition_covariance(spec, probe, chunk=256, workers=0):
    """Covariance of lifted superpositions against ``J_0``."""
    if spec.n_draws < 100:
        raise PreconditionError(f'n_draws must be >= 100, got {spec.n_draws}')
    coords = np.concatenate([[[0.0, 0.0]], probe.coords])
    dataset = SuperpositionDataset(spec, coords, chunk=chunk)
    metric = Metric_Covariance(
        probe.edges, np.hypot(*probe.coords.T),
        oracle=lambda r: covariance_euclidean(2, 1.0, r), radii=probe.radii)
    for batch in build_dataloader(dataset, workers=workers):
        for item in batch:
            values = item['values']
            metric.add_batch(values[:, :1] * values[:, 1:])
    return metric.count_covariance(verbose=False)


def superposition_point_values(spec, chunk=1024, workers=0):
    """Values of every draw at the patch center."""
    dataset = SuperpositionDataset(spec, np.zeros((1, 2)), chunk=chunk)
    return np.concatenate([
        item['values'][:, 0]
        for batch in build_dataloader(dataset, workers=workers)
        for item in batch
    ])


def window_kernel(basis, x, y):
    """``K(x, y) = (1 / k) sum_j phi_j(x) phi_j(y)``."""
    if not len(basis):
        raise PreconditionError('window kernel of an empty basis')
    return np.sum(basis.evaluate(x) * basis.evaluate(y), axis=0) / len(basis)


def window_kernel_distance(basis, radii, n_motions=1000, seed=0):
    """Mean ``|K(p, p + R v / mu) - J_0(|v|)|`` over random rigid motions.

    ``v`` runs over ``radii`` along the first axis, ``(p, R)`` are uniform
    base points and rotations and ``mu = sqrt(lambda0)``.

    Returns:
        KernelDistance: Per-radius means and their average.
    """
    radii = np.asarray(radii, dtype=float)
    mu = math.sqrt(basis.window.lambda0)
    points, angles = sample_bases(basis.space, n_motions, seed)
    coords = np.stack([radii, np.zeros_like(radii)], axis=-1)
    y = lift_points(basis.space, points, rotations(angles), coords, mu)
    x = np.broadcast_to(points[:, None, :], y.shape)
    gap = np.abs(window_kernel(basis, x, y) - covariance_euclidean(2, 1.0,
                                                                   radii))
    per_radius = gap.mean(axis=0)
    return KernelDistance(radii, per_radius, float(per_radius.mean()))


def compare_modes(first, second):
    """Bin-wise agreement of two covariance estimates."""
    keep = first.valid & second.valid
    diff = first.mean[keep] - second.mean[keep]
    scale = np.sqrt(first.stderr[keep]**2 + second.stderr[keep]**2)
    z = np.abs(diff) / np.where(scale > 0, scale, np.inf)
    return ModeComparison(float(np.max(np.abs(diff))), float(np.max(z)))


def mode_ks_threshold(n, alpha=0.001):
    """Critical one-sample KS distance at level ``alpha`` for ``n`` values."""
    return float(stats.kstwo.isf(alpha, n))
