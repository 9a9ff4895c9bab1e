_base_ = ['./_base_/default_runtime.py']

scale = 'full'
only = None
checks = dict(
    euclidean_covariance=dict(
        wave=dict(type='EuclideanWave', mu=1.0, dim=2, n_directions=256),
        samples=20000, r_max=8.0, num=50, n_rays=8, tol=0.03),
    hyperbolic_covariance=dict(
        wave=dict(type='HyperbolicWave', s=1.0, n_boundary=256),
        samples=20000, r_max=4.0, num=21, n_rays=8, tol=0.03),
    gaussianity=dict(
        waves=[
            dict(type='EuclideanWave', mu=1.0, dim=2, n_directions=256),
            dict(type='HyperbolicWave', s=1.0, n_boundary=256),
        ],
        samples=20000, ks=0.02, energy=0.03, skew=0.05, kurtosis=0.1),
    spherical_function=dict(s=[0.5, 1.0, 2.0], num=50, tol=1e-4),
    eigen_relation=dict(
        s=1.0,
        points=[(0.0, 0.0), (0.3, 0.0), (0.0, 0.3), (-0.2, 0.2), (0.45, 0.0)],
        tol=1e-3),
    inverse_transform=dict(num=21, tol=1e-4, calibration=1e-4),
    weyl_law=dict(
        lambda0=[100.0, 1000.0, 10000.0], delta=0.5, disc=[1e2, 1e4, 1e6],
        band=[9000.5, 11000.5], band_tol=0.02),
    qe_variance=dict(
        lambda0=[2500.0, 10000.0, 40000.0], delta=0.5, amplitude='bump:0.003',
        profile='box:1'),
    cutoff=dict(delta=0.5, lambda0=1.25, r_cuts=[5.0, 10.0, 20.0, 40.0],
                tol=1e-3),
    propagator=dict(s=[0.5, 1.0, 2.0, 3.0]),
    superposition=dict(
        lambda0=10000.0, delta=0.5, samples=5000, r_max=6.0, num=13,
        n_rays=8, tol=0.05, point_samples=20000, ks=0.02,
        kernel_lambda0=[25.0, 400.0, 6400.0], n_motions=1000),
    nodal=dict(grids=100, half_width=30.0, resolution=201, patches=100),
)

# smaller samples and matching tolerances for `verify --scale quick`
quick = dict(
    euclidean_covariance=dict(samples=2000, num=17, tol=0.1),
    hyperbolic_covariance=dict(samples=2000, num=9, tol=0.1),
    gaussianity=dict(samples=2000, ks=0.05, energy=0.1, skew=0.2,
                     kurtosis=0.4),
    superposition=dict(samples=500, tol=0.15, point_samples=2000, ks=0.05,
                       n_motions=200),
    nodal=dict(grids=10, half_width=15.0, resolution=101, patches=10),
)
