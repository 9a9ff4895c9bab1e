import math

import numpy as np
import pytest
from scipy import special

from models.geometry import FlatTorus
from models.qe import (Constant, Cosine, PeriodicGaussian, TestKernel,
                       amplitude_fourier, amplitude_mean, apply_kernel,
                       averaged, disintegrate, expected_value,
                       geodesic_average, matrix_element, matrix_elements,
                       parse_amplitude, parse_profile, reassemble,
                       variance_statistic)
from models.spectral import (BoxProfile, BumpProfile, SpectralWindow,
                             enumerate_window, hankel)
from models.utils import ArgumentError, PreconditionError

TORUS = FlatTorus(2 * math.pi)


def basis_at(lambda0, delta=0.5):
    return enumerate_window(TORUS, SpectralWindow(lambda0, delta))


def torus_grid(n):
    axis = 2 * math.pi * np.arange(n) / n
    return np.stack(np.meshgrid(axis, axis, indexing='ij'), axis=-1)


class TestAmplitudes:

    def test_parse(self):
        assert isinstance(parse_amplitude('one'), Constant)
        cos = parse_amplitude('1+cos3@1')
        assert (cos.freq, cos.offset, cos.axis) == (3, 1.0, 1)
        bump = parse_amplitude('bump:0.01')
        assert isinstance(bump, PeriodicGaussian) and bump.sigma == 0.01
        assert isinstance(parse_amplitude(dict(type='Constant', value=2.0)),
                          Constant)
        for bad in ('sin1', 'bump:x', 'cos0', '1+bump:0.1'):
            with pytest.raises(ArgumentError):
                parse_amplitude(bad)

    def test_periodic_gaussian_mean(self):
        kernel = TestKernel(TORUS, PeriodicGaussian(0.05), 'box:1')
        values = kernel.amplitude_values(torus_grid(256))
        assert abs(values.mean()) < 1e-10
        assert amplitude_mean(kernel) == 0.0

    @pytest.mark.parametrize('amplitude', [
        Cosine(2, offset=1.0, scale=0.5),
        PeriodicGaussian(0.05, center=(0.3, 0.7)),
        PeriodicGaussian(0.08, zero_mean=False)
    ])
    def test_fft_matches_closed_form(self, amplitude):
        kernel = TestKernel(TORUS, amplitude, 'box:1')
        vectors = np.array([[0, 0], [2, 0], [-2, 0], [1, 3], [4, -4]])
        np.testing.assert_allclose(
            amplitude_fourier(kernel, vectors, exact=False),
            amplitude_fourier(kernel, vectors), atol=1e-8)


class TestTestKernel:

    def test_support_must_inject(self):
        with pytest.raises(PreconditionError):
            TestKernel(FlatTorus(1.5), 'one', 'box:1')

    def test_parse_profile(self):
        assert isinstance(parse_profile('box:1'), BoxProfile)
        bump = parse_profile('bump:2')
        assert isinstance(bump, BumpProfile) and bump.support == 2.0
        with pytest.raises(ArgumentError):
            parse_profile('cone:1')

    def test_vanishes_beyond_support(self):
        kernel = TestKernel(TORUS, '1+cos1', 'box:1')
        assert kernel([0.0, 0.0], [1.5, 0.0]) == 0.0
        assert kernel([0.0, 0.0], [0.5, 0.0]) == pytest.approx(2.0)


class TestGeodesicAverage:

    def test_constant_amplitude(self):
        kernel = TestKernel(TORUS, 'one', 'bump:1')
        r = np.linspace(0, 1.5, 7)
        np.testing.assert_array_equal(geodesic_average(kernel, r),
                                      kernel.profile(r))

    def test_mean_zero(self):
        kernel = TestKernel(TORUS, 'cos1', 'box:1')
        np.testing.assert_array_equal(
            geodesic_average(kernel, [0.0, 0.5, 2.0]), 0.0)

    def test_shifted_cosine(self):
        kernel = TestKernel(TORUS, '1+cos1', 'box:1')
        np.testing.assert_array_equal(
            geodesic_average(kernel, [0.2, 0.9, 1.2]), [1.0, 1.0, 0.0])

    def test_idempotent(self):
        kernel = TestKernel(TORUS, PeriodicGaussian(0.05, zero_mean=False),
                            'bump:1')
        r = np.linspace(0, 1, 5)
        once = averaged(kernel)
        np.testing.assert_array_equal(geodesic_average(averaged(once), r),
                                      geodesic_average(once, r))

    def test_negative_radius(self):
        with pytest.raises(ArgumentError):
            geodesic_average(TestKernel(TORUS, 'one', 'box:1'), -1.0)


class TestExpectedValue:

    def test_mean_zero(self):
        kernel = TestKernel(TORUS, 'bump:0.01', 'box:1')
        np.testing.assert_array_equal(expected_value(kernel, [1.0, 25.0]), 0)

    def test_bessel_identity(self):
        kernel = TestKernel(TORUS, 'one', 'box:1')
        assert expected_value(kernel, 1.0) == pytest.approx(
            2 * math.pi * special.j1(1.0), abs=1e-8)

    def test_averaged_operator(self):
        # <A>_lambda_j = <phi_j, [A] phi_j>, evaluated by direct quadrature
        kernel = TestKernel(TORUS, '1+cos1', 'bump:1')
        basis = basis_at(25.0)
        flat = averaged(kernel)
        x = torus_grid(12).reshape(-1, 2)
        for j in (0, 5, 11):
            xi = basis.frequencies[j // 2]
            trig = np.cos if j % 2 == 0 else np.sin
            phi = lambda p: math.sqrt(2.0) * trig(p @ xi)
            direct = np.mean(phi(x) * reassemble(flat, phi, x, panels=16,
                                                 n_angular=64))
            expected = expected_value(kernel, basis.eigenvalues[j])
            assert direct == pytest.approx(expected, rel=1e-6)


class TestMatrixElements:

    def test_pure_convolution(self):
        basis = basis_at(25.0)
        kernel = TestKernel(TORUS, 'one', 'box:1')
        np.testing.assert_allclose(matrix_elements(basis, kernel),
                                   hankel(kernel.profile, 5.0), rtol=1e-12)

    def test_zero_kernel(self):
        basis = basis_at(25.0)
        kernel = TestKernel(TORUS, Constant(0.0), 'box:1')
        np.testing.assert_array_equal(matrix_elements(basis, kernel), 0.0)

    def test_multiplication_limit(self):
        basis = basis_at(1.0)
        profile = BumpProfile(radius=1e-4, normalize='euclidean')
        kernel = TestKernel(TORUS, Cosine(2, offset=1.0), profile)
        x = torus_grid(16)
        a = kernel.amplitude_values(x)
        direct = np.mean(a * basis.evaluate(x)**2, axis=(1, 2))
        np.testing.assert_allclose(matrix_elements(basis, kernel), direct,
                                   atol=1e-6)
        assert matrix_element(basis, 2, kernel) == pytest.approx(1.5,
                                                                 abs=1e-6)

    def test_fft_path(self):
        basis = basis_at(25.0)
        kernel = TestKernel(TORUS, Cosine(10, scale=2.0), 'bump:1')
        np.testing.assert_allclose(
            matrix_elements(basis, kernel, exact=False),
            matrix_elements(basis, kernel), atol=1e-8)

    def test_bad_index(self):
        with pytest.raises(ArgumentError):
            matrix_element(basis_at(25.0), 12,
                           TestKernel(TORUS, 'one', 'box:1'))

    def test_side_mismatch(self):
        basis = enumerate_window(FlatTorus(10.0), SpectralWindow(25.0, 0.5))
        with pytest.raises(ArgumentError):
            matrix_elements(basis, TestKernel(TORUS, 'one', 'box:1'))


class TestDisintegration:

    def test_constant_function(self):
        kernel = TestKernel(TORUS, '1+cos1', 'box:1')
        x = np.random.default_rng(0).uniform(0, 2 * math.pi, (10, 2))
        slice_ = disintegrate(kernel, 0.7)
        np.testing.assert_allclose(slice_(lambda p: np.ones(p.shape[:-1]), x),
                                   kernel.amplitude_values(x), rtol=1e-14)

    def test_plane_wave(self):
        kernel = TestKernel(TORUS, 'one', 'box:1')
        xi = np.array([3.0, 4.0])
        wave = lambda p: np.cos(p @ xi)
        x = np.random.default_rng(1).uniform(0, 2 * math.pi, (10, 2))
        for r in (0.0, 0.4, 1.0):
            np.testing.assert_allclose(disintegrate(kernel, r)(wave, x),
                                       special.j0(5.0 * r) * wave(x),
                                       atol=1e-12)

    def test_outside_support(self):
        kernel = TestKernel(TORUS, 'one', 'box:1')
        x = np.zeros((3, 2))
        np.testing.assert_array_equal(
            disintegrate(kernel, 1.5)(lambda p: np.ones(p.shape[:-1]), x), 0)

    def test_reassembly(self):
        rng = np.random.default_rng(2)
        freqs = rng.integers(-4, 5, size=(6, 2)).astype(float)
        coeffs = rng.standard_normal(6)
        phases = rng.uniform(0, 2 * math.pi, 6)

        def f(p):
            return np.cos(p @ freqs.T + phases) @ coeffs

        kernel = TestKernel(TORUS, '1+cos1', 'bump:1')
        x = rng.uniform(0, 2 * math.pi, (8, 2))
        direct = apply_kernel(kernel, f, x, panels=12)
        np.testing.assert_allclose(reassemble(kernel, f, x, panels=16), direct,
                                   rtol=1e-6, atol=1e-9)


class TestVariance:

    def test_pure_convolution(self):
        report = variance_statistic(basis_at(2500.0),
                                    TestKernel(TORUS, 'one', 'box:1'))
        assert report.count == 20
        assert report.variance_center0 < 1e-10
        assert report.variance_centerj < 1e-10

    @pytest.mark.slow
    def test_decay(self):
        kernel = TestKernel(TORUS, 'bump:0.003', 'box:1')
        variances = []
        for lambda0 in (2500.0, 1e4, 4e4):
            report = variance_statistic(basis_at(lambda0), kernel)
            assert report.centering_bound_holds()
            variances.append(report.variance)
        assert variances[0] > variances[1] > variances[2]
        assert variances[2] < 0.5 * variances[0]

    def test_small_window(self):
        basis = basis_at(1.0)
        kernel = TestKernel(TORUS, Cosine(2, offset=0.5), 'bump:1')
        report = variance_statistic(basis, kernel)
        elements = matrix_elements(basis, kernel)
        expected = expected_value(kernel, 1.0)
        assert report.variance_center0 == pytest.approx(
            np.mean((elements - expected)**2), rel=1e-12)
        assert len(report.rows()) == 4

    def test_empty_window(self):
        report = variance_statistic(basis_at(3.0, 0.4),
                                    TestKernel(TORUS, 'one', 'box:1'))
        assert report.count == 0 and not report.defined
        assert math.isnan(report.variance)
        assert report.summary()['count'] == 0

    def test_constant_shift(self):
        basis = basis_at(25.0)
        centered = TestKernel(TORUS, PeriodicGaussian(0.05), 'bump:1')
        shifted = TestKernel(TORUS, PeriodicGaussian(0.05, zero_mean=False),
                             'bump:1')
        np.testing.assert_allclose(
            variance_statistic(basis, shifted).deviation,
            variance_statistic(basis, centered).deviation, atol=1e-12)
