_base_ = ['./_base_/default_runtime.py']

s_values = [0.5, 1.0, 2.0, 3.0]
t = dict(start=0.1, stop=30.0, num=300)
horizons = [10.0, 20.0, 30.0, 40.0, 50.0]
fit = True
