_base_ = ['./_base_/default_runtime.py']

wave = dict(type='EuclideanWave', mu=1.0, dim=2, n_directions=256)
patch = dict(half_width=10.0, resolution=201)
