"""Separable test kernels ``A(x, y) = a(x) k(d(x, y))`` on a flat torus."""
from ..builder import build_profile
from ..geometry.spaces import FlatTorus
from ..spectral.radial import BoxProfile, BumpProfile, RadialKernel
from ..utils.errors import ArgumentError, PreconditionError
from .amplitudes import parse_amplitude


def parse_profile(spec):
    """Radial profile from a config dict or ``box:M`` / ``bump:M``."""
    if isinstance(spec, RadialKernel):
        return spec
    if isinstance(spec, dict):
        return build_profile(spec)
    kind, _, radius = str(spec).partition(':')
    try:
        radius = float(radius) if radius else 1.0
    except ValueError:
        raise ArgumentError(f'bad profile {spec!r}') from None
    if kind == 'box':
        return BoxProfile(radius)
    if kind == 'bump':
        return BumpProfile(radius)
    raise ArgumentError(f'unknown profile {spec!r}')


class TestKernel:
    """Kernel ``a(x) k(d(x, y))`` whose support injects into the torus.

    Args:
        space (FlatTorus): The torus.
        amplitude: :class:`BaseAmplitude`, config dict or short name.
        profile: :class:`RadialKernel`, config dict or short name.

    Raises:
        PreconditionError: If the support radius is not below ``L / 2``.
    """

    __test__ = False

    def __init__(self, space, amplitude, profile):
        if not isinstance(space, FlatTorus):
            raise ArgumentError('test kernels live on a FlatTorus')
        self.space = space
        self.amplitude = parse_amplitude(amplitude)
        self.profile = parse_profile(profile)
        if not self.profile.support < space.side / 2:
            raise PreconditionError(
                f'support {self.profile.support} must be < L/2 = '
                f'{space.side / 2}')

    @property
    def support(self):
        return self.profile.support

    def amplitude_values(self, x):
        """``a(x)`` at torus points ``x`` of shape ``(..., 2)``."""
        return self.amplitude(self.space.reduce(x) / self.space.side)

    def __call__(self, x, y):
        return self.amplitude_values(x) * self.profile(
            self.space.distance(x, y))

    def to_dict(self):
        return dict(side=self.space.side, amplitude=self.amplitude.to_dict(),
                    profile=self.profile.to_dict())

