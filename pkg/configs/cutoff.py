_base_ = ['./_base_/default_runtime.py']

delta = 0.5
lambda0 = 1.25
r_cuts = [5.0, 10.0, 20.0, 40.0]
