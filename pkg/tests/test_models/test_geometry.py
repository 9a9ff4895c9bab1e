import math

import numpy as np
import pytest
from scipy import stats

from models.geometry import (Euclidean, FlatTorus, HyperbolicDisc, PatchGrid,
                             PointFrame, bs_lift, build_space, distance,
                             horocycle_bracket, rescale_metric, sample_base,
                             sample_bases)
from models.utils import ArgumentError, DomainError, PreconditionError


def _random_disc_points(rng, n):
    radius = 0.9 * np.sqrt(rng.uniform(size=n))
    return radius * np.exp(2j * np.pi * rng.uniform(size=n))


class TestDistance:

    def test_examples(self):
        assert distance(Euclidean(2), (0, 0), (3, 4)) == pytest.approx(5.0)
        assert distance(FlatTorus(10.0), (0, 0), (9, 0)) == pytest.approx(1.0)
        z = math.tanh(0.5)
        assert distance(HyperbolicDisc(), 0.0, z) == pytest.approx(1.0,
                                                                  abs=1e-14)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            distance(HyperbolicDisc(), 0.0, 1.0)
        with pytest.raises(DomainError):
            distance(HyperbolicDisc(), (0.0, 0.0), (0.8, 0.7))

    def test_symmetric_and_zero(self):
        rng = np.random.default_rng(1)
        z, w = _random_disc_points(rng, 100), _random_disc_points(rng, 100)
        disc = HyperbolicDisc()
        np.testing.assert_allclose(disc.distance(z, w), disc.distance(w, z),
                                   atol=1e-12)
        np.testing.assert_array_equal(disc.distance(z, z), 0.0)

    @pytest.mark.parametrize('space', [
        Euclidean(2), FlatTorus(3.0), HyperbolicDisc()])
    def test_triangle_inequality(self, space):
        rng = np.random.default_rng(2)
        n = 10**4
        if isinstance(space, HyperbolicDisc):
            x, y, z = (_random_disc_points(rng, n) for _ in range(3))
        else:
            x, y, z = (rng.uniform(-4, 4, size=(n, 2)) for _ in range(3))
        lhs = space.distance(x, z)
        rhs = space.distance(x, y) + space.distance(y, z)
        assert np.all(lhs <= rhs + 1e-12)

    def test_invalid_spaces(self):
        with pytest.raises(ArgumentError):
            Euclidean(0)
        with pytest.raises(ArgumentError):
            FlatTorus(-1.0)

    def test_build_space(self):
        assert build_space(dict(type='torus', side=3.0)) == FlatTorus(3.0)
        with pytest.raises(ArgumentError):
            build_space(dict(type='sphere'))

    def test_hyperbolic_constants(self):
        disc = HyperbolicDisc()
        assert disc.rho == 0.5
        assert disc.eigenvalue(2.0) == 4.25
        np.testing.assert_allclose(disc.ball_volume(1.0),
                                   2 * np.pi * (np.cosh(1.0) - 1), rtol=1e-14)


class TestRescale:

    def test_torus(self):
        torus = rescale_metric(FlatTorus(2 * math.pi), 2.0)
        assert torus.side == pytest.approx(4 * math.pi)
        assert torus.eigenvalue((5, 0)) == pytest.approx(25.0 / 4)
        assert rescale_metric(FlatTorus(3.0), 1.0) == FlatTorus(3.0)

    def test_euclidean_is_identity(self):
        assert rescale_metric(Euclidean(3), 5.0) == Euclidean(3)

    @pytest.mark.parametrize('r', [0.0, -2.0])
    def test_invalid(self, r):
        with pytest.raises(ArgumentError):
            rescale_metric(FlatTorus(), r)

    def test_disc_cannot_rescale(self):
        with pytest.raises(ArgumentError):
            rescale_metric(HyperbolicDisc(), 2.0)


class TestFrames:

    def test_orthonormal(self):
        with pytest.raises(ArgumentError):
            PointFrame((0, 0), [[1, 0], [1, 1]])
        frame = PointFrame.from_angle((1, 2), 0.75)
        assert frame.angle == pytest.approx(0.75)

    def test_torus_point_reduced(self):
        torus = FlatTorus(2 * math.pi)
        frame = PointFrame.from_angle((7.0, -1.0), 0.3, torus)
        np.testing.assert_allclose(frame.point,
                                   [7.0 - 2 * math.pi, 2 * math.pi - 1.0])
        assert np.all((frame.point >= 0) & (frame.point < torus.side))
        # points outside a torus are kept as given
        assert PointFrame.from_angle((7.0, -1.0)).point.tolist() == \
            [7.0, -1.0]

    def test_patch_grid(self):
        patch = PatchGrid.centered(2.0, 5)
        np.testing.assert_allclose(patch.axis, [-2, -1, 0, 1, 2])
        assert patch.spacing == 1.0
        assert patch.area == 16.0
        assert patch.coords[1, 3].tolist() == [-1.0, 1.0]
        again = PatchGrid.from_dict(patch.to_dict())
        np.testing.assert_array_equal(again.coords, patch.coords)

    @pytest.mark.parametrize('half_width,resolution', [(0.0, 4), (1.0, 1),
                                                       (1.0, 2.5)])
    def test_invalid_patch(self, half_width, resolution):
        with pytest.raises(ArgumentError):
            PatchGrid.centered(half_width, resolution)


class TestSampleBase:

    def test_deterministic(self):
        torus = FlatTorus(1.0)
        a, b = sample_base(torus, 123), sample_base(torus, 123)
        np.testing.assert_array_equal(a.point, b.point)
        np.testing.assert_array_equal(a.frame, b.frame)
        assert not np.array_equal(a.point, sample_base(torus, 124).point)

    def test_requires_torus(self):
        with pytest.raises(ArgumentError):
            sample_base(Euclidean(2), 0)

    def test_uniform_pushforward(self):
        points, angles = sample_bases(FlatTorus(1.0), 10**5, seed=2024)
        assert abs(points[:, 0].mean() - 0.5) < 0.01
        ks = stats.kstest(angles / (2 * np.pi), 'uniform')
        assert ks.pvalue > 0.01
        counts, _, _ = np.histogram2d(points[:, 0], points[:, 1], bins=10,
                                      range=[[0, 1], [0, 1]])
        assert stats.chisquare(counts.ravel()).pvalue > 0.001


class TestBSLift:

    def test_constant(self):
        torus = FlatTorus(2 * math.pi)
        patch = PatchGrid.centered(1.0, 9)
        sample = bs_lift(torus, lambda x: np.ones(len(x)),
                         sample_base(torus, 3), patch, mu=1.5)
        np.testing.assert_array_equal(sample.values, 1.0)

    def test_identity_and_rotation(self):
        torus = FlatTorus(2 * math.pi)
        patch = PatchGrid.centered(2.0, 11)
        f = lambda x: np.cos(x[..., 0])  # noqa: E731
        u = patch.coords
        lifted = bs_lift(torus, f, PointFrame.from_angle(), patch, mu=1.0)
        np.testing.assert_allclose(lifted.values, np.cos(u[..., 0]),
                                   atol=1e-14)
        turned = bs_lift(torus, f, PointFrame.from_angle(angle=math.pi / 2),
                         patch, mu=1.0)
        np.testing.assert_allclose(turned.values, np.cos(u[..., 1]),
                                   atol=1e-14)

    def test_scale_composition(self):
        torus = FlatTorus(2 * math.pi)
        base = sample_base(torus, 99)
        f = lambda x: np.sin(3 * x[..., 0]) * np.cos(2 * x[..., 1])  # noqa: E731
        small = bs_lift(torus, f, base, PatchGrid.centered(1.0, 17), mu=2.0)
        large = bs_lift(torus, f, base, PatchGrid.centered(2.0, 17), mu=4.0)
        np.testing.assert_array_equal(small.values, large.values)

    def test_injectivity(self):
        torus = FlatTorus(2 * math.pi)
        with pytest.raises(PreconditionError):
            bs_lift(torus, np.cos, PointFrame.from_angle(),
                    PatchGrid.centered(4.0, 5), mu=1.0)
        with pytest.raises(ArgumentError):
            bs_lift(torus, np.cos, PointFrame.from_angle(),
                    PatchGrid.centered(1.0, 5), mu=0.0)


class TestHorocycleBracket:

    def test_examples(self):
        assert horocycle_bracket(0.0, 1.0) == pytest.approx(0.0)
        assert horocycle_bracket(0.5, 1.0) == pytest.approx(math.log(3))
        assert horocycle_bracket(0.5, -1.0) == pytest.approx(-math.log(3))
        assert horocycle_bracket(0.0, 1j) == pytest.approx(0.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            horocycle_bracket(1.0, -1.0)
        with pytest.raises(DomainError):
            horocycle_bracket(0.2, 0.5)
