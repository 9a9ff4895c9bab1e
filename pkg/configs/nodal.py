_base_ = ['./_base_/default_runtime.py']

samples = 100
source = 'wave'
wave = dict(type='EuclideanWave', mu=1.0, dim=2, n_directions=256)
patch = dict(half_width=30.0, resolution=201)
superposition = dict(L=6.283185307179586, lambda0=10000.0, delta=0.5)
