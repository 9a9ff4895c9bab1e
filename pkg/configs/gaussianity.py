_base_ = ['./_base_/default_runtime.py']

samples = 20000
source = 'wave'
wave = dict(type='EuclideanWave', mu=1.0, dim=2, n_directions=256)
torus = dict(L=6.283185307179586, lambda0=10000.0, delta=0.5)
cutoff = 3.0
K_grid = [0.0, 1.0, 2.0, 4.0, 8.0, 16.0]
