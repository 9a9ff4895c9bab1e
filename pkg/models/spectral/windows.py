"""Spectral windows and shrinking-window schedules."""
import math
from collections import namedtuple
from dataclasses import dataclass

import numpy as np

from ..geometry.spaces import HyperbolicDisc
from ..utils.errors import ArgumentError, PreconditionError


@dataclass(frozen=True)
class SpectralWindow:
    """Eigenvalue interval ``[lambda0 - delta, lambda0 + delta]``."""
    lambda0: float
    delta: float

    def __post_init__(self):
        if not self.lambda0 > 0 or not self.delta > 0:
            raise ArgumentError(
                f'window needs lambda0 > 0 and delta > 0, got '
                f'({self.lambda0}, {self.delta})')
        if not self.lambda0 - self.delta > 0:
            raise ArgumentError(
                f'window [{self.lower}, {self.upper}] must stay above 0')

    @classmethod
    def from_bounds(cls, lower, upper):
        return cls(0.5 * (lower + upper), 0.5 * (upper - lower))

    @property
    def lower(self):
        return self.lambda0 - self.delta

    @property
    def upper(self):
        return self.lambda0 + self.delta

    def contains(self, lam):
        lam = np.asarray(lam, dtype=float)
        return (lam >= self.lower) & (lam <= self.upper)

    def to_dict(self):
        return dict(lambda0=self.lambda0, delta=self.delta)


ScheduleStep = namedtuple('ScheduleStep', 'index R r alpha delta')


@dataclass(frozen=True)
class WindowSchedule:
    """A sequence of window widths tied to growing injectivity radii.

    ``R`` are injectivity radii, ``r = c_prime * R`` the kernel radii,
    ``alpha`` the thin-part ratios and ``delta >= r**-beta_prime`` the
    window half-widths.
    """
    R: tuple
    r: tuple
    alpha: tuple
    delta: tuple
    beta_prime: float = 0.5
    c_prime: float = 0.5

    def __len__(self):
        return len(self.R)

    def __getitem__(self, n):
        return ScheduleStep(n, self.R[n], self.r[n], self.alpha[n],
                            self.delta[n])

    def __iter__(self):
        return (self[n] for n in range(len(self)))

    def thin_part_terms(self):
        """``r_n vol(B(e, r_n)) alpha_n``, required to decrease to 0."""
        r = np.asarray(self.r)
        return r * HyperbolicDisc().ball_volume(r) * np.asarray(self.alpha)

    def validate(self):
        if not 0 < self.c_prime < 1:
            raise PreconditionError(f'c_prime must lie in (0, 1), got {self.c_prime}')
        if not 0 < self.beta_prime < 1:
            raise PreconditionError(
                f'beta_prime must lie in (0, 1), got {self.beta_prime}')
        R, r = np.asarray(self.R), np.asarray(self.r)
        alpha, delta = np.asarray(self.alpha), np.asarray(self.delta)
        if np.any(r > self.c_prime * R * (1 + 1e-12)):
            raise PreconditionError('r_n must not exceed c_prime * R_n')
        if np.any((alpha < 0) | (alpha > 1)):
            raise PreconditionError('alpha_n must lie in [0, 1]')
        if np.any(delta < r**(-self.beta_prime) * (1 - 1e-12)):
            raise PreconditionError('delta_n must be at least r_n**-beta_prime')
        terms = self.thin_part_terms()
        if len(terms) > 1 and np.any(np.diff(terms) >= 0):
            raise PreconditionError(
                'r_n vol(B(e, r_n)) alpha_n must decrease along the schedule, '
                f'got {terms.tolist()}')
        return self

    def to_dict(self):
        return dict(R=list(self.R), r=list(self.r), alpha=list(self.alpha),
                    delta=list(self.delta), beta_prime=self.beta_prime,
                    c_prime=self.c_prime)


def build_schedule(R_values, c_prime=0.5, beta_prime=0.5, alpha=None):
    """Schedule with ``r_n = c' R_n`` and ``delta_n = r_n**-beta'``.

    Args:
        R_values (list[float]): Increasing injectivity radii.
        c_prime (float): Ratio ``r_n / R_n`` in (0, 1).
        beta_prime (float): Window exponent in (0, 1).
        alpha (None | callable | list[float]): Thin-part ratios. ``None``
            uses ``exp(-2 R_n)``, a callable is evaluated on ``R_n``.

    Raises:
        PreconditionError: If the schedule violates one of its invariants.
    """
    R = np.asarray(R_values, dtype=float)
    if R.ndim != 1 or R.size == 0 or np.any(R <= 0) or np.any(np.diff(R) <= 0):
        raise ArgumentError('R_values must be positive and increasing')
    if alpha is None:
        alpha = np.exp(-2.0 * R)
    elif callable(alpha):
        alpha = np.asarray([alpha(x) for x in R], dtype=float)
    else:
        alpha = np.asarray(alpha, dtype=float)
        if alpha.shape != R.shape:
            raise ArgumentError('alpha must have one entry per R value')
    r = c_prime * R
    delta = r**(-beta_prime)
    schedule = WindowSchedule(
        tuple(R.tolist()), tuple(r.tolist()), tuple(alpha.tolist()),
        tuple(delta.tolist()), float(beta_prime), float(c_prime))
    return schedule.validate()


def shrinking_windows(lambda0, schedule):
    """The windows ``[lambda0 - delta_n, lambda0 + delta_n]`` of a schedule."""
    return [SpectralWindow(float(lambda0), step.delta) for step in schedule]


def disc_window(upper, lower=0.5):
    """Window ``[lower, upper]`` for cumulative Weyl counts."""
    if not upper > lower:
        raise ArgumentError(f'upper bound {upper} must exceed {lower}')
    return SpectralWindow.from_bounds(lower, upper)


def tile_windows(lower, upper, delta):
    """Adjacent windows of half-width ``delta`` covering ``[lower, upper)``."""
    n = int(math.floor((upper - lower) / (2 * delta) + 1e-9))
    if n < 1:
        raise ArgumentError('band is narrower than one window')
    return [SpectralWindow(lower + (2 * k + 1) * delta, delta) for k in range(n)]
