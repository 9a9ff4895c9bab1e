_base_ = ['./_base_/default_runtime.py']

L = 6.283185307179586
lambda0 = 10000.0
delta = 0.5
windows = [
    dict(lambda0=100.0, delta=0.5),
    dict(lambda0=1000.0, delta=0.5),
    dict(lambda0=10000.0, delta=0.5),
]
# circle-problem windows [1/2, X]
disc = [1e2, 1e4, 1e6]
brute_force = True
schedule = dict(R=[10.0, 20.0, 40.0], c_prime=0.5, beta_prime=0.5,
                lambda0=10000.0)
max_listed = 200
