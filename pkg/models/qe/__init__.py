from .amplitudes import (BaseAmplitude, Constant, Cosine, PeriodicGaussian,
                         parse_amplitude)
from .kernels import TestKernel, parse_profile
from .operators import (RadialSlice, amplitude_fourier, amplitude_mean,
                        apply_kernel, averaged, disintegrate, expected_value,
                        geodesic_average, matrix_element, matrix_elements,
                        reassemble)
from .variance import QEReport, variance_statistic

__all__ = [
    'BaseAmplitude', 'Constant', 'Cosine', 'PeriodicGaussian',
    'parse_amplitude', 'TestKernel', 'parse_profile', 'amplitude_fourier',
    'amplitude_mean', 'averaged', 'geodesic_average', 'expected_value',
    'matrix_element', 'matrix_elements', 'apply_kernel', 'RadialSlice',
    'disintegrate', 'reassemble', 'QEReport', 'variance_statistic'
]
