from .bessel import bessel_j0, bessel_j1, bessel_jn, bessel_jn_all
from .errors import (ArgumentError, BSWavesError, DomainError, NumericError,
                     PreconditionError)
from .logger import attach_log_file, detach_log_file, get_root_logger
from .quadrature import gauss_legendre, integrate_vec, panel_rule
from .seeding import check_seed, make_rng, spawn_seed, spawn_seeds
from .structures import FieldSample

__all__ = [
    'bessel_j0', 'bessel_j1', 'bessel_jn', 'bessel_jn_all', 'BSWavesError',
    'DomainError', 'ArgumentError', 'PreconditionError', 'NumericError',
    'get_root_logger', 'attach_log_file', 'detach_log_file', 'gauss_legendre',
    'panel_rule', 'integrate_vec',
    'check_seed', 'spawn_seed', 'spawn_seeds', 'make_rng', 'FieldSample'
]
