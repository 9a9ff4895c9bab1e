import logging
from collections import namedtuple

import numpy as np
from mmcv.utils import print_log
from termcolor import colored
from tqdm import tqdm

from models.geometry import PointFrame, RadialProbe
from models.utils import PreconditionError
from .builder import build_dataloader
from .field_dataset import WaveSampleDataset

COVARIANCE_FIELDS = ('r', 'empirical', 'stderr', 'theoretical')


class CovarianceEstimate(
        namedtuple('CovarianceEstimate',
                   'radii mean stderr theoretical n_samples valid')):
    """Binned two-point covariance with Monte Carlo errors.

    ``valid`` flags the bins that received pairs; empty bins carry NaN and
    are left out of every comparison.
    """

    def max_error(self, r_max=None):
        keep = self.valid.copy()
        if r_max is not None:
            keep &= self.radii <= r_max
        return float(np.max(np.abs(self.mean[keep] - self.theoretical[keep])))

    def z_scores(self):
        keep = self.valid & (self.stderr > 0)
        return (self.mean[keep] - self.theoretical[keep]) / self.stderr[keep]

    def rows(self):
        return [
            dict(zip(COVARIANCE_FIELDS, map(float, row)))
            for row in zip(self.radii[self.valid], self.mean[self.valid],
                           self.stderr[self.valid],
                           self.theoretical[self.valid])
        ]


class Metric_Covariance:
    """Accumulates pair products ``F(x) F(y)`` into distance bins.

    Every realization contributes the mean of its products in a bin, so the
    per-bin values are independent across realizations and the standard
    error is their sample deviation over ``sqrt(n)``.

    Args:
        edges (np.ndarray): Increasing bin edges.
        distances (np.ndarray): Distance of every pair.
        oracle (callable, optional): Covariance as a function of distance.
        radii (np.ndarray, optional): Bin representatives, default midpoints.
    """

    def __init__(self, edges, distances, oracle=None, radii=None):
        self.edges = np.asarray(edges, dtype=float)
        self.distances = np.asarray(distances, dtype=float).reshape(-1)
        self.n_bins = self.edges.size - 1
        self.bins = np.digitize(self.distances, self.edges) - 1
        inside = (self.bins >= 0) & (self.bins < self.n_bins)
        self.pair_counts = np.bincount(self.bins[inside],
                                       minlength=self.n_bins)
        self._inside = inside
        self.radii = (0.5 * (self.edges[1:] + self.edges[:-1])
                      if radii is None else np.asarray(radii, dtype=float))
        self.oracle = oracle
        self.total = np.zeros(self.n_bins)
        self.total_sq = np.zeros(self.n_bins)
        self.cnt = 0

    def add_batch(self, products):
        """Add ``(S, n_pairs)`` products of ``S`` realizations."""
        products = np.atleast_2d(products)[:, self._inside]
        bins = self.bins[self._inside]
        sums = np.zeros((products.shape[0], self.n_bins))
        np.add.at(sums.T, bins, products.T)
        with np.errstate(invalid='ignore', divide='ignore'):
            per_sample = sums / self.pair_counts
        valid = self.pair_counts > 0
        self.total[valid] += per_sample[:, valid].sum(0)
        self.total_sq[valid] += np.square(per_sample[:, valid]).sum(0)
        self.cnt += products.shape[0]

    def count_covariance(self, verbose=True):
        valid = self.pair_counts > 0
        n = self.cnt
        mean = np.full(self.n_bins, np.nan)
        stderr = np.full(self.n_bins, np.nan)
        mean[valid] = self.total[valid] / n
        if n >= 2:
            var = (self.total_sq[valid] - n * mean[valid]**2) / (n - 1)
            stderr[valid] = np.sqrt(np.maximum(var, 0.0) / n)
        theoretical = np.full(self.n_bins, np.nan)
        if self.oracle is not None:
            theoretical = np.asarray(self.oracle(self.radii), dtype=float)
        if not np.all(valid):
            print_log(f'{int((~valid).sum())} empty covariance bins excluded',
                      logger='bswaves', level=logging.WARNING)
        estimate = CovarianceEstimate(self.radii, mean, stderr, theoretical, n,
                                      valid)
        if verbose:
            print(f'===> covariance of {n} samples over '
                  f'{int(valid.sum())} bins')
            if self.oracle is not None:
                err = estimate.max_error()
                print('===> max |empirical - oracle| = ' +
                      colored(f'{err:.4f}', 'cyan'))
        return estimate


def radial_probe(radii, n_rays=2, center=None, offset=0.0):
    center = center or PointFrame.from_angle((0.0, 0.0), 0.0)
    return RadialProbe(center, radii, n_rays, offset)


def empirical_covariance(wave, probe, n_samples, seed, chunk=256, workers=0,
                         progress=False):
    """Estimate ``E[F(o) F(u)]`` between the probe center and probe points.

    Args:
        wave (BaseWave | dict): Sampler or its config.
        probe (RadialProbe): Points on rays; each radius is one bin.
        n_samples (int): Realizations, at least 100.
        seed (int): Root seed.

    Returns:
        CovarianceEstimate: Oracle values from ``wave.oracle``.
    """
    if n_samples < 100:
        raise PreconditionError(f'n_samples must be >= 100, got {n_samples}')
    coords = np.concatenate([[[0.0, 0.0]], probe.coords])
    dataset = WaveSampleDataset(wave, coords, n_samples, seed, chunk=chunk,
                                center=probe.center)
    metric = Metric_Covariance(probe.edges, np.hypot(*probe.coords.T),
                               oracle=dataset.wave.oracle, radii=probe.radii)
    loader = build_dataloader(dataset, samples_per_batch=1, workers=workers)
    for batch in tqdm(loader, disable=not progress, desc='covariance'):
        for item in batch:
            values = item['values']
            metric.add_batch(values[:, :1] * values[:, 1:])
    return metric.count_covariance(verbose=progress)
