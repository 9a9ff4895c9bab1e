import math

import numpy as np
from torch.utils.data import Dataset

from models.builder import build_wave
from models.utils import ArgumentError, spawn_seeds
from models.waves import BaseWave
from .builder import DATASETS


@DATASETS.register_module()
class WaveSampleDataset(Dataset):
    """Field values of seeded wave realizations at fixed frame coordinates.

    Item ``i`` holds the realizations ``[i * chunk, (i + 1) * chunk)``; the
    seed of realization ``n`` is the ``n``-th sub-seed of ``seed``.

    Args:
        wave (BaseWave | dict): Sampler or its registry config.
        coords (np.ndarray): ``(m, 2)`` frame coordinates.
        n_samples (int): Number of realizations.
        seed (int): Root seed.
        chunk (int): Realizations per item.
        center (PointFrame, optional): Frame the coordinates refer to.
    """

    def __init__(self, wave, coords, n_samples, seed, chunk=256, center=None):
        self.wave = wave if isinstance(wave, BaseWave) else build_wave(wave)
        self.coords = np.asarray(coords, dtype=float).reshape(-1, 2)
        if int(n_samples) != n_samples or n_samples < 1:
            raise ArgumentError(f'n_samples must be >= 1, got {n_samples}')
        self.n_samples = int(n_samples)
        self.seed = seed
        self.chunk = int(chunk)
        self.center = center

    def __len__(self):
        return int(math.ceil(self.n_samples / self.chunk))

    def __getitem__(self, idx):
        if not 0 <= idx < len(self):
            raise IndexError(idx)
        start = idx * self.chunk
        count = min(self.chunk, self.n_samples - start)
        seeds = spawn_seeds(self.seed, count, start)
        values = self.wave.sample_values(self.coords, seeds, self.center)
        return dict(index=idx, start=start, values=values)

