from .cutoff import (CutoffResult, chi_delta, cutoff_deviation_curve,
                     cutoff_kernel, cutoff_profile, spectral_parameter)
from .propagator import (AsymptoticFit, PropagatorBound, ball_integral,
                         ball_volume, fit_propagator_asymptotic,
                         propagator_asymptotic, propagator_eigenvalue,
                         propagator_lower_bound, propagator_time_average)
from .radial import (BoxProfile, BumpProfile, RadialKernel, TabulatedKernel,
                     TruncatedKernel, bump, hankel, smooth_step)
from .torus_basis import (TorusEigenbasis, WeylCount, band_average_count,
                          brute_force_window, count_window, enumerate_window,
                          weyl_prediction, weyl_window_count)
from .transforms import (PlancherelCalibration, calibrate_plancherel,
                         disc_convolve, gaussian_hat, inverse_kernel,
                         inverse_transform_h2, plancherel_constant,
                         plancherel_density, round_trip_error,
                         shifted_gaussian_hat, spherical_transform_h2)
from .windows import (ScheduleStep, SpectralWindow, WindowSchedule,
                      build_schedule, disc_window, shrinking_windows,
                      tile_windows)

__all__ = [
    'SpectralWindow', 'WindowSchedule', 'ScheduleStep', 'build_schedule',
    'shrinking_windows', 'disc_window', 'tile_windows', 'TorusEigenbasis',
    'WeylCount', 'enumerate_window', 'brute_force_window', 'count_window',
    'weyl_prediction', 'weyl_window_count', 'band_average_count',
    'RadialKernel', 'BoxProfile', 'BumpProfile', 'TabulatedKernel',
    'TruncatedKernel', 'bump', 'smooth_step', 'hankel',
    'spherical_transform_h2', 'inverse_transform_h2', 'inverse_kernel',
    'plancherel_density', 'plancherel_constant', 'calibrate_plancherel',
    'PlancherelCalibration', 'gaussian_hat', 'shifted_gaussian_hat',
    'round_trip_error', 'disc_convolve', 'CutoffResult', 'chi_delta',
    'spectral_parameter', 'cutoff_profile', 'cutoff_kernel',
    'cutoff_deviation_curve', 'PropagatorBound', 'AsymptoticFit',
    'ball_volume', 'ball_integral', 'propagator_eigenvalue',
    'propagator_time_average', 'propagator_lower_bound',
    'propagator_asymptotic', 'fit_propagator_asymptotic'
]
