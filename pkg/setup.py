import os.path as osp

from setuptools import setup


def get_version():
    version_file = osp.join(osp.dirname(__file__), 'runner', 'version.py')
    with open(version_file, 'r') as f:
        exec(compile(f.read(), version_file, 'exec'))
    return locals()['__version__']


setup(
    name='bswaves',
    version=get_version(),
    description='Gaussian random waves, spectral windows and eigenfunction '
    'statistics on flat tori and the hyperbolic plane',
    packages=['models', 'models.utils', 'models.geometry', 'models.waves',
              'models.spectral', 'models.qe', 'loaders', 'runner'],
    py_modules=['run'],
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.21',
        'scipy>=1.8',
        'mmcv>=1.6.0,<2.0.0',
        'torch>=1.10',
        'tqdm',
        'termcolor',
        'matplotlib',
    ],
    extras_require=dict(tests=['pytest']),
    entry_points=dict(console_scripts=['bswaves=run:main']),
)
