_base_ = ['./_base_/default_runtime.py']

manifest = None
replay_out = None
