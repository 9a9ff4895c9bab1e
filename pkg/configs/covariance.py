_base_ = ['./_base_/default_runtime.py']

samples = 20000
wave = dict(type='EuclideanWave', mu=1.0, dim=2, n_directions=256)
# one bin per radius, n_rays points on each
probe = dict(r_max=8.0, num=50, n_rays=8)
chunk = 256
