_base_ = ['./_base_/default_runtime.py']

L = 6.283185307179586
lambda0 = 2500.0
delta = 0.5
# zero-mean periodic Gaussian bump
amplitude = 'bump:0.003'
profile = 'box:1'
exact = True
sweep = [2500.0, 10000.0, 40000.0]
