import numpy as np
import pytest

from loaders import (DATASETS, Metric_Covariance, WaveSampleDataset,
                     build_dataloader, build_dataset, empirical_covariance,
                     radial_probe, resolve_workers)
from loaders.builder import WORKERS_ENV
from models.utils import ArgumentError, PreconditionError, spawn_seeds
from models.waves import EuclideanWave, HyperbolicWave


class TestDataLoader:

    def test_items_are_pure(self):
        wave = EuclideanWave(mu=1.0, n_directions=32)
        coords = np.array([[0.0, 0.0], [0.5, 0.25]])
        dataset = WaveSampleDataset(wave, coords, 10, seed=3, chunk=4)
        assert len(dataset) == 3
        first = dataset[1]['values']
        np.testing.assert_array_equal(first, dataset[1]['values'])
        assert dataset[2]['values'].shape == (2, 2)
        expected = wave.sample_values(coords, spawn_seeds(3, 4, start=4))
        np.testing.assert_array_equal(first, expected)
        with pytest.raises(IndexError):
            dataset[3]

    def test_chunking_does_not_change_values(self):
        wave = dict(type='EuclideanWave', mu=1.0, n_directions=32)
        coords = np.array([[0.0, 0.0], [1.0, 0.0]])
        a = WaveSampleDataset(wave, coords, 9, seed=5, chunk=2)
        b = WaveSampleDataset(wave, coords, 9, seed=5, chunk=9)
        stacked = np.concatenate([a[i]['values'] for i in range(len(a))])
        np.testing.assert_array_equal(stacked, b[0]['values'])

    def test_registry_and_loader(self):
        assert 'WaveSampleDataset' in DATASETS.module_dict
        dataset = build_dataset(
            dict(type='WaveSampleDataset',
                 wave=dict(type='InvariantSine', mu=1.0),
                 coords=np.zeros((1, 2)), n_samples=5, seed=0, chunk=2))
        batches = list(build_dataloader(dataset))
        assert [b[0]['start'] for b in batches] == [0, 2, 4]

    def test_workers_env(self, monkeypatch):
        monkeypatch.delenv(WORKERS_ENV, raising=False)
        assert resolve_workers(2) == 2
        monkeypatch.setenv(WORKERS_ENV, '0')
        assert resolve_workers(4) == 0

    def test_workers_env_malformed(self, monkeypatch):
        monkeypatch.setenv(WORKERS_ENV, 'four')
        with pytest.raises(ArgumentError, match=WORKERS_ENV):
            resolve_workers(1)


class TestMetricCovariance:

    def test_known_products(self):
        metric = Metric_Covariance([0.0, 1.0, 2.0], [0.5, 0.5, 1.5],
                                   oracle=lambda r: np.zeros_like(r))
        metric.add_batch(np.array([[1.0, 3.0, 2.0], [0.0, 2.0, 4.0]]))
        est = metric.count_covariance(verbose=False)
        np.testing.assert_allclose(est.mean, [1.5, 3.0])
        # per-sample bin means 2, 1 and 2, 4
        np.testing.assert_allclose(est.stderr, [0.5, 1.0])
        assert est.max_error() == 3.0

    def test_unbiased_on_white_products(self):
        rng = np.random.default_rng(0)
        metric = Metric_Covariance(np.arange(51.0), np.arange(50) + 0.5,
                                   oracle=lambda r: np.zeros_like(r))
        for _ in range(10):
            metric.add_batch(rng.standard_normal((2000, 50)))
        z = metric.count_covariance(verbose=False).z_scores()
        assert z.size == 50
        assert abs(z.mean()) < 0.45
        assert 0.7 < z.std() < 1.3

    def test_empty_bins(self):
        metric = Metric_Covariance([0.0, 1.0, 2.0, 3.0], [0.5, 2.5])
        metric.add_batch(np.ones((3, 2)))
        est = metric.count_covariance(verbose=False)
        np.testing.assert_array_equal(est.valid, [True, False, True])
        assert np.isnan(est.mean[1])
        assert len(est.rows()) == 2

    def test_too_few_samples(self):
        with pytest.raises(PreconditionError):
            empirical_covariance(EuclideanWave(), radial_probe([0.0, 1.0]),
                                 50, seed=0)


class TestEmpiricalCovariance:

    def test_origin_bin(self):
        est = empirical_covariance(EuclideanWave(mu=1.0), radial_probe([0.0]),
                                   2000, seed=11)
        assert abs(est.mean[0] - 1.0) < 3 * est.stderr[0]

    def test_stderr_scaling(self):
        wave = EuclideanWave(mu=1.0, n_directions=64)
        probe = radial_probe(np.linspace(0.0, 4.0, 9))
        small = empirical_covariance(wave, probe, 2000, seed=1)
        large = empirical_covariance(wave, probe, 4000, seed=2)
        ratio = np.mean(small.stderr / large.stderr)
        assert abs(ratio - np.sqrt(2.0)) < 0.1 * np.sqrt(2.0)

    def test_isotropy(self):
        wave = EuclideanWave(mu=1.0, n_directions=64)
        radii = np.linspace(0.5, 4.0, 8)
        a = empirical_covariance(wave, radial_probe(radii, n_rays=1), 4000,
                                 seed=21)
        b = empirical_covariance(
            wave, radial_probe(radii, n_rays=1, offset=np.pi / 3), 4000,
            seed=22)
        z = np.abs(a.mean - b.mean) / np.hypot(a.stderr, b.stderr)
        assert np.mean(z) < 2.0

    @pytest.mark.slow
    def test_euclidean(self):
        probe = radial_probe(np.linspace(0.0, 8.0, 50), n_rays=8)
        est = empirical_covariance(
            EuclideanWave(mu=1.0, n_directions=256), probe, 20000, seed=7,
            chunk=512)
        assert est.n_samples == 20000
        assert est.max_error() < 0.03

    @pytest.mark.slow
    def test_hyperbolic(self):
        probe = radial_probe(np.linspace(0.0, 4.0, 21), n_rays=8)
        est = empirical_covariance(
            HyperbolicWave(s=1.0, n_boundary=256), probe, 20000, seed=8,
            chunk=512)
        assert est.max_error() < 0.03
