_base_ = ['./_base_/default_runtime.py']

profile = 'bump:1'
s_grid = dict(start=0.0, stop=6.0, num=61)
references = ['gaussian', 'shifted_gaussian']
