_base_ = ['./_base_/default_runtime.py']

samples = 5000
L = 6.283185307179586
lambda0 = 10000.0
delta = 0.5
mode = 'beta'
n_reads = 16
# patch in units of the wavelength scale 1 / sqrt(lambda0)
patch = dict(half_width=6.0, resolution=61)
probe = dict(r_max=6.0, num=13, n_rays=8)
point_samples = 20000
kernel_distance = dict(
    lambda0=[25.0, 400.0, 6400.0], width=2.0, n_motions=1000, r_max=5.0,
    num=11)
compare = False
