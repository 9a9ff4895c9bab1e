import numpy as np

from .errors import ArgumentError

MAX_SEED = 2**64 - 1


def check_seed(seed):
    """Validate a 64-bit seed and return it as a python int."""
    if isinstance(seed, (bool, float)) or int(seed) != seed:
        raise ArgumentError(f'seed must be an integer, got {seed!r}')
    seed = int(seed)
    if not 0 <= seed <= MAX_SEED:
        raise ArgumentError(f'seed must lie in [0, 2**64), got {seed}')
    return seed


def spawn_seed(root, index):
    """Derive the ``index``-th sub-seed of ``root``.

    The rule is counter based: the sub-seed is the first 64-bit word of
    ``SeedSequence(root, spawn_key=(index,))``. It depends on nothing but
    ``(root, index)``, so serial and parallel runs see the same streams.
    """
    ss = np.random.SeedSequence(check_seed(root), spawn_key=(int(index), ))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def spawn_seeds(root, n, start=0):
    return [spawn_seed(root, i) for i in range(start, start + n)]


def make_rng(seed):
    return np.random.default_rng(check_seed(seed))
