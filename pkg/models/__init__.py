from .builder import (AMPLITUDES, PROFILES, WAVES, build_amplitude,
                      build_profile, build_wave)
from .geometry import *
from .qe import *
from .spectral import *
from .utils import *
from .waves import *

__all__ = [
    'WAVES', 'PROFILES', 'AMPLITUDES', 'build_wave', 'build_profile',
    'build_amplitude'
]
