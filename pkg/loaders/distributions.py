"""One-point value distributions, energies and square measures.

For a sample ``X = F(p)^2`` of squared field values the square measure is
``d tau(x) = x d rho(x)``; its total mass is the energy ``E[X]`` and
``1 - energy`` is the mass lost at infinity.
"""
from collections import namedtuple

import numpy as np
from scipy import stats

from models.geometry import FlatTorus, bs_point_values
from models.utils import ArgumentError, PreconditionError, make_rng
from .builder import build_dataloader
from .field_dataset import WaveSampleDataset

ValueDistribution = namedtuple(
    'ValueDistribution',
    'n mean variance skewness excess_kurtosis ks ks_pvalue energy '
    'energy_stderr tail_mass cutoff')
SquareMeasure = namedtuple('SquareMeasure', 'K tail energy deficit')

MIN_VALUES = 1000


def gaussianity_report(values, cutoff=3.0):
    """Moments, KS distance to N(0, 1), energy and ``P(|F| > cutoff)``."""
    values = np.asarray(values, dtype=float).reshape(-1)
    if values.size < MIN_VALUES:
        raise PreconditionError(
            f'need at least {MIN_VALUES} values, got {values.size}')
    if not np.all(np.isfinite(values)):
        raise ArgumentError('values must be finite')
    ks = stats.kstest(values, 'norm')
    squares = values**2
    return ValueDistribution(
        n=int(values.size),
        mean=float(values.mean()),
        variance=float(values.var(ddof=1)),
        skewness=float(stats.skew(values)),
        excess_kurtosis=float(stats.kurtosis(values)),
        ks=float(ks.statistic),
        ks_pvalue=float(ks.pvalue),
        energy=float(squares.mean()),
        energy_stderr=float(squares.std(ddof=1) / np.sqrt(values.size)),
        tail_mass=float(np.mean(np.abs(values) > cutoff)),
        cutoff=float(cutoff))


def square_measure(values, K_grid):
    """``tau``-mass ``E[X; X > K]`` of ``X = F^2`` for every ``K``."""
    values = np.asarray(values, dtype=float).reshape(-1)
    if not np.all(np.isfinite(values)):
        raise ArgumentError('values must be finite')
    squares = values**2
    K = np.atleast_1d(np.asarray(K_grid, dtype=float))
    tail = np.array([np.mean(np.where(squares > k, squares, 0.0)) for k in K])
    energy = float(squares.mean())
    return SquareMeasure(K, tail, energy, 1.0 - energy)


def distribution_rows(report):
    """``(moment, value)`` rows of a :class:`ValueDistribution`."""
    return [dict(moment=name, value=float(getattr(report, name)))
            for name in report._fields]


def point_values(wave, n_samples, seed, chunk=1024, workers=0):
    """Values of ``n_samples`` realizations at the frame origin."""
    dataset = WaveSampleDataset(wave, np.zeros((1, 2)), n_samples, seed,
                                chunk=chunk)
    loader = build_dataloader(dataset, samples_per_batch=1, workers=workers)
    return np.concatenate([item['values'][:, 0] for batch in loader
                           for item in batch])


def eigenfunction_values(basis, n_points, seed, coeffs=None):
    """A window function read at volume-uniform random points.

    Without ``coeffs`` a unit-sphere combination is drawn from ``seed``.
    """
    if not isinstance(basis.space, FlatTorus) or not len(basis):
        raise PreconditionError('need a nonempty torus eigenbasis')
    rng = make_rng(seed)
    if coeffs is None:
        coeffs = rng.standard_normal(len(basis))
    coeffs = np.asarray(coeffs, dtype=float)
    coeffs = coeffs / np.linalg.norm(coeffs)
    point_seed = int(rng.integers(0, 2**63))
    return bs_point_values(basis.space, lambda x: basis.combine(coeffs, x),
                           n_points, point_seed)
