from mmcv.utils import Registry, build_from_cfg

WAVES = Registry('wave')
PROFILES = Registry('profile')
AMPLITUDES = Registry('amplitude')


def build_wave(cfg, default_args=None):
    """Build a random wave sampler from ``dict(type=..., ...)``."""
    return build_from_cfg(cfg, WAVES, default_args)


def build_profile(cfg, default_args=None):
    """Build a radial profile."""
    return build_from_cfg(cfg, PROFILES, default_args)


def build_amplitude(cfg, default_args=None):
    """Build a position amplitude on the torus."""
    return build_from_cfg(cfg, AMPLITUDES, default_args)
