from .kernels import (covariance_euclidean, hyperbolic_covariance,
                      spherical_function)
from .samplers import (BaseWave, BesselPolar, EuclideanWave, HyperbolicWave,
                       InvariantSine, invariant_sine, sample_bessel_polar,
                       sample_euclidean_wave, sample_hyperbolic_wave)

__all__ = [
    'covariance_euclidean', 'spherical_function', 'hyperbolic_covariance',
    'BaseWave', 'EuclideanWave', 'BesselPolar', 'HyperbolicWave',
    'InvariantSine', 'sample_euclidean_wave', 'sample_bessel_polar',
    'sample_hyperbolic_wave', 'invariant_sine'
]
