import math

import numpy as np
import pytest
from scipy import integrate

from models.builder import build_wave
from models.geometry import PatchGrid
from models.utils import ArgumentError, spawn_seeds
from models.waves import (BesselPolar, EuclideanWave, HyperbolicWave,
                          InvariantSine, covariance_euclidean,
                          invariant_sine, sample_bessel_polar,
                          sample_euclidean_wave, sample_hyperbolic_wave,
                          spherical_function)


def legendre_oracle(s, r):
    """``P_{-1/2+is}(cosh r)`` from Laplace's integral."""

    def integrand(theta):
        x = math.cosh(r) + math.sinh(r) * math.cos(theta)
        return math.cos(s * math.log(x)) / math.sqrt(x)

    value, _ = integrate.quad(integrand, 0.0, math.pi, epsabs=1e-14,
                              epsrel=1e-13, limit=500)
    return value / math.pi


def helmholtz_residual(sample, mu):
    f = sample.values
    h = sample.patch.spacing
    lap = (f[2:, 1:-1] + f[:-2, 1:-1] + f[1:-1, 2:] + f[1:-1, :-2] -
           4 * f[1:-1, 1:-1]) / h**2
    res = lap + mu**2 * f[1:-1, 1:-1]
    return np.abs(res).max() / np.abs(f).max()


class TestCovarianceEuclidean:

    def test_examples(self):
        assert covariance_euclidean(2, 1.0, 0.0) == 1.0
        assert abs(covariance_euclidean(2, 1.0, 2.404826)) < 1e-6
        assert abs(covariance_euclidean(3, 2.0, math.pi / 2)) < 1e-15
        assert covariance_euclidean(3, 2.0, 0.0) == 1.0

    def test_negative_distance(self):
        with pytest.raises(ArgumentError):
            covariance_euclidean(2, 1.0, -0.1)


class TestSphericalFunction:

    def test_origin(self):
        for s in (0.0, 0.5, 1.0, 7.0):
            assert abs(spherical_function(s, 0.0) - 1.0) < 1e-10

    @pytest.mark.parametrize('s,r', [(1.0, 1.0), (0.0, 2.0), (2.0, 0.5),
                                     (1.0, 4.0), (0.5, 6.0)])
    def test_legendre_oracle(self, s, r):
        assert abs(spherical_function(s, r) - legendre_oracle(s, r)) < 1e-8

    def test_even_in_s(self):
        assert spherical_function(-1.0, 2.0) == spherical_function(1.0, 2.0)

    def test_paths_agree(self):
        r = np.linspace(1.0, 3.0, 9)
        for s in (0.3, 1.0, 4.0):
            near = spherical_function(s, r, r_switch=10.0)
            far = spherical_function(s, r, r_switch=0.0)
            np.testing.assert_allclose(near, far, atol=1e-9)

    def test_broadcast(self):
        s = np.array([0.5, 1.0, 2.0])[:, None]
        r = np.linspace(0.0, 8.0, 17)[None, :]
        table = spherical_function(s, r)
        assert table.shape == (3, 17)
        assert np.all(np.abs(table) <= 1.0 + 1e-12)

    def test_large_radius(self):
        value = spherical_function(1.0, 60.0)
        assert np.isfinite(value)
        assert abs(value) < 10 * math.exp(-30.0) * 60.0

    @pytest.mark.parametrize('s', [0.5, 1.0, 2.0])
    def test_radial_equation(self, s):
        h = 0.01
        r = np.linspace(0.1, 5.0, 99)
        f = {k: spherical_function(s, r + k * h) for k in (-2, -1, 0, 1, 2)}
        d1 = (-f[2] + 8 * f[1] - 8 * f[-1] + f[-2]) / (12 * h)
        d2 = (-f[2] + 16 * f[1] - 30 * f[0] + 16 * f[-1] - f[-2]) / (12 * h**2)
        lam = 0.25 + s**2
        res = d2 + d1 / np.tanh(r) + lam * f[0]
        assert np.abs(res).max() / np.abs(lam * f[0]).max() < 1e-4

    def test_negative_distance(self):
        with pytest.raises(ArgumentError):
            spherical_function(1.0, -1.0)


class TestEuclideanWave:

    def test_spec_validation(self):
        with pytest.raises(ArgumentError):
            EuclideanWave(mu=1.0, n_directions=8)
        with pytest.raises(ArgumentError):
            EuclideanWave(mu=0.0)
        with pytest.raises(ArgumentError):
            EuclideanWave(dim=4)

    def test_deterministic_and_regenerable(self):
        patch = PatchGrid.centered(3.0, 16, point=(1.0, -2.0), angle=0.4)
        wave = EuclideanWave(mu=1.0, n_directions=64)
        a = sample_euclidean_wave(wave, patch, seed=7)
        b = sample_euclidean_wave(dict(mu=1.0, n_directions=64), patch, 7)
        np.testing.assert_array_equal(a.values, b.values)
        c = build_wave(a.spec).sample(patch, a.seed)
        np.testing.assert_array_equal(a.values, c.values)

    @pytest.mark.parametrize('dim', [2, 3])
    def test_grid_matches_pointwise(self, dim):
        patch = PatchGrid.centered(2.0, 12, point=(0.3, 0.1), angle=1.1)
        wave = EuclideanWave(mu=2.0, dim=dim, n_directions=32)
        grid = wave.sample(patch, 5).values.ravel()
        pointwise = wave.sample_values(patch.coords, [5], patch.center)[0]
        np.testing.assert_allclose(grid, pointwise, atol=1e-12)

    @pytest.mark.slow
    def test_normalization_and_zero(self):
        wave = EuclideanWave(mu=1.0, n_directions=256)
        seeds = spawn_seeds(2024, 2 * 10**4)
        values = wave.sample_values([[0.0, 0.0], [2.405, 0.0]], seeds)
        assert abs(np.mean(values[:, 0]**2) - 1.0) < 0.03
        assert abs(np.mean(values[:, 0] * values[:, 1])) < 0.03

    def test_helmholtz_residual(self):
        wave = EuclideanWave(mu=1.0, n_directions=64)
        coarse = wave.sample(PatchGrid.centered(1.0, 21), 3)
        fine = wave.sample(PatchGrid.centered(1.0, 41), 3)
        ratio = helmholtz_residual(coarse, 1.0) / helmholtz_residual(fine, 1.0)
        assert 3.0 < ratio < 5.0


class TestBesselPolar:

    def test_functional_form(self):
        patch = PatchGrid.centered(2.0, 11)
        a = sample_bessel_polar(1.0, 32, patch, 5)
        b = build_wave(a.spec).sample(patch, 5)
        np.testing.assert_array_equal(a.values, b.values)
        assert a.spec['n_modes'] == 32

    def test_single_mode(self):
        patch = PatchGrid.centered(1.5, 9)
        with pytest.warns(RuntimeWarning):
            wave = BesselPolar(mu=1.0, n_modes=0)
        with pytest.warns(RuntimeWarning):
            sample = wave.sample(patch, 11)
        r = np.linalg.norm(patch.coords, axis=-1)
        ratio = sample.values / covariance_euclidean(2, 1.0, r)
        np.testing.assert_allclose(ratio, ratio[4, 4], rtol=1e-12)

    def test_truncation_warning(self):
        wave = BesselPolar(mu=1.0, n_modes=8)
        with pytest.warns(RuntimeWarning, match='truncated'):
            wave.sample(PatchGrid.centered(10.0, 5), 1)

    @pytest.mark.slow
    def test_covariance_and_isotropy(self):
        wave = BesselPolar(mu=1.0, n_modes=24)
        seeds = spawn_seeds(5, 2 * 10**4)
        coords = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
        values = wave.sample_values(coords, seeds)
        cov = values[:, 0] * values[:, 1:].T
        target = covariance_euclidean(2, 1.0, 1.0)
        assert abs(cov[0].mean() - target) < 0.03
        stderr = cov.std(axis=1, ddof=1) / math.sqrt(len(seeds))
        assert abs(cov[0].mean() - cov[1].mean()) < 2 * math.hypot(*stderr)


class TestHyperbolicWave:

    def test_spec_validation(self):
        with pytest.raises(ArgumentError):
            HyperbolicWave(s=1.0, n_boundary=16)
        with pytest.raises(ArgumentError):
            HyperbolicWave(s=-1.0)

    def test_regenerable(self):
        patch = PatchGrid.centered(1.0, 8, point=(0.2, 0.1), angle=0.3)
        a = sample_hyperbolic_wave(dict(s=1.0), patch, 3)
        b = build_wave(a.spec).sample(patch, 3)
        np.testing.assert_array_equal(a.values, b.values)

    @pytest.mark.slow
    @pytest.mark.parametrize('n_boundary', [256, 512])
    def test_covariance(self, n_boundary):
        wave = HyperbolicWave(s=1.0, n_boundary=n_boundary)
        seeds = spawn_seeds(17, 2 * 10**4)
        values = wave.sample_values([[0.0, 0.0], [1.0, 0.0]], seeds)
        assert abs(np.mean(values[:, 0]**2) - 1.0) < 0.03
        target = spherical_function(1.0, 1.0)
        assert abs(np.mean(values[:, 0] * values[:, 1]) - target) < 0.03

    def test_oracle(self):
        assert HyperbolicWave(s=2.0).oracle(0.0) == pytest.approx(1.0)


class TestInvariantSine:

    def test_bounded(self):
        sample = invariant_sine(PatchGrid.centered(5.0, 201), 4)
        assert np.all(np.abs(sample.values) <= 1.0)
        assert helmholtz_residual(sample, 1.0) < 1e-3

    @pytest.mark.slow
    def test_second_moment(self):
        seeds = spawn_seeds(8, 10**5)
        values = InvariantSine().sample_values([[0.0, 0.0]], seeds)[:, 0]
        assert abs(np.mean(values**2) - 0.5) < 0.01
