"""Acceptance suite run by ``bswaves verify``.

Each check reads its sizes from ``cfg.checks[name]`` and returns a
:class:`CheckResult`. Checks that raise are reported as failures with the
exception as detail, so one broken check never hides the others.
"""
import logging
import math
from collections import OrderedDict, namedtuple

import numpy as np
from mmcv.utils import print_log
from termcolor import colored

from loaders import (SuperpositionSpec, count_sign_domains,
                     empirical_covariance, gaussianity_report, nodal_count,
                     nodal_statistics, point_values, radial_probe,
                     superposition_covariance, superposition_point_values,
                     union_find_domains, window_kernel_distance)
from models.builder import build_wave
from models.geometry import FlatTorus, PatchGrid, disc_distance
from models.qe import TestKernel, variance_statistic
from models.spectral import (BoxProfile, BumpProfile, SpectralWindow,
                             band_average_count, brute_force_window,
                             calibrate_plancherel, count_window,
                             cutoff_deviation_curve, disc_convolve,
                             disc_window, enumerate_window,
                             propagator_asymptotic, propagator_eigenvalue,
                             propagator_lower_bound, round_trip_error,
                             shifted_gaussian_hat, spherical_transform_h2,
                             weyl_window_count)
from models.spectral.propagator import ball_volume
from models.utils import ArgumentError, BSWavesError, spawn_seed
from models.waves import spherical_function
from .commands import COMMANDS, BaseCommand
from .io import write_table

CheckResult = namedtuple('CheckResult', 'check passed value threshold detail')
RESULT_FIELDS = CheckResult._fields

CHECKS = OrderedDict()


def acceptance(name):

    def register(func):
        CHECKS[name] = func
        return func

    return register


def _result(name, value, threshold, passed=None, detail=''):
    if passed is None:
        passed = value < threshold
    return CheckResult(name, bool(passed), float(value), float(threshold),
                       detail)


def _probe(opts):
    return radial_probe(np.linspace(0.0, opts['r_max'], opts['num']),
                        n_rays=opts['n_rays'])


def _covariance(name, opts, seed, workers):
    est = empirical_covariance(opts['wave'], _probe(opts), opts['samples'],
                               seed, chunk=512, workers=workers)
    return _result(name, est.max_error(), opts['tol'],
                   detail=f'{int(est.valid.sum())} bins')


@acceptance('euclidean_covariance')
def check_euclidean_covariance(opts, seed, workers):
    return _covariance('euclidean_covariance', opts, seed, workers)


@acceptance('hyperbolic_covariance')
def check_hyperbolic_covariance(opts, seed, workers):
    return _covariance('hyperbolic_covariance', opts, seed, workers)


@acceptance('gaussianity')
def check_gaussianity(opts, seed, workers):
    worst_ks = worst_energy = worst_skew = worst_kurt = 0.0
    for i, wave in enumerate(opts['waves']):
        report = gaussianity_report(
            point_values(wave, opts['samples'], spawn_seed(seed, i),
                         workers=workers))
        worst_ks = max(worst_ks, report.ks)
        worst_energy = max(worst_energy, abs(report.energy - 1.0))
        worst_skew = max(worst_skew, abs(report.skewness))
        worst_kurt = max(worst_kurt, abs(report.excess_kurtosis))
    passed = (worst_ks < opts['ks'] and worst_energy < opts['energy']
              and worst_skew < opts['skew']
              and worst_kurt < opts['kurtosis'])
    return _result(
        'gaussianity', worst_ks, opts['ks'], passed,
        f'max |energy - 1| = {worst_energy:.4f}, max |skew| = '
        f'{worst_skew:.4f}, max |excess kurtosis| = {worst_kurt:.4f}')


def radial_residual(s, r, h=0.01):
    """Relative residual of ``phi'' + coth(r) phi' + (1/4 + s^2) phi = 0``."""
    f = {k: spherical_function(s, r + k * h) for k in (-2, -1, 0, 1, 2)}
    d1 = (-f[2] + 8 * f[1] - 8 * f[-1] + f[-2]) / (12 * h)
    d2 = (-f[2] + 16 * f[1] - 30 * f[0] + 16 * f[-1] - f[-2]) / (12 * h**2)
    lam = 0.25 + s * s
    res = d2 + d1 / np.tanh(r) + lam * f[0]
    return float(np.abs(res).max() / np.abs(lam * f[0]).max())


@acceptance('spherical_function')
def check_spherical_function(opts, seed, workers):
    r = np.linspace(0.1, 5.0, opts['num'])
    residual = max(radial_residual(s, r) for s in opts['s'])
    origin = max(abs(spherical_function(s, 0.0) - 1.0) for s in opts['s'])
    passed = residual < opts['tol'] and origin < 1e-10
    return _result('spherical_function', residual, opts['tol'], passed,
                   f'|phi_s(0) - 1| = {origin:.1e}')


@acceptance('eigen_relation')
def check_eigen_relation(opts, seed, workers):
    worst = 0.0
    for kernel in (BumpProfile(1.0), BoxProfile(1.0)):
        s = opts['s']
        khat = spherical_transform_h2(kernel, s)
        for z in opts['points']:
            z = complex(*z)
            expected = khat * spherical_function(s, disc_distance(z, 0.0))
            got = disc_convolve(kernel, s, z)
            worst = max(worst, abs(got - expected) / abs(expected))
    return _result('eigen_relation', worst, opts['tol'])


@acceptance('inverse_transform')
def check_inverse_transform(opts, seed, workers):
    err = round_trip_error(shifted_gaussian_hat,
                           np.linspace(0.0, 4.0, opts['num']), s_max=7.0)
    first = calibrate_plancherel('gaussian').constant
    second = calibrate_plancherel('shifted_gaussian').constant
    spread = abs(first - second) / abs(first)
    passed = err < opts['tol'] and spread < opts['calibration']
    return _result('inverse_transform', err, opts['tol'], passed,
                   f'calibration spread {spread:.1e}')


@acceptance('weyl_law')
def check_weyl_law(opts, seed, workers):
    space = FlatTorus(2 * math.pi)
    exact = all(
        count_window(space, SpectralWindow(lam, opts['delta'])) == len(
            brute_force_window(space, SpectralWindow(lam, opts['delta'])))
        for lam in opts['lambda0'])
    errors = [
        weyl_window_count(space, disc_window(upper)).rel_error
        for upper in opts['disc']
    ]
    band = band_average_count(space, *opts['band'], opts['delta'])
    decreasing = all(a > b for a, b in zip(errors[:-1], errors[1:]))
    passed = exact and decreasing and band.rel_error < opts['band_tol']
    return _result(
        'weyl_law', band.rel_error, opts['band_tol'], passed,
        f'brute force {"equal" if exact else "DIFFERS"}, disc errors ' +
        ', '.join(f'{e:.1e}' for e in errors))


@acceptance('qe_variance')
def check_qe_variance(opts, seed, workers):
    space = FlatTorus(2 * math.pi)
    variances = []
    for lam in opts['lambda0']:
        basis = enumerate_window(space, SpectralWindow(lam, opts['delta']))
        kernel = TestKernel(space, opts['amplitude'], opts['profile'])
        variances.append(variance_statistic(basis, kernel).variance)
    basis = enumerate_window(space, SpectralWindow(opts['lambda0'][0],
                                                   opts['delta']))
    control = variance_statistic(
        basis, TestKernel(space, 'one', opts['profile'])).variance
    decreasing = all(a > b for a, b in zip(variances[:-1], variances[1:]))
    ratio = variances[-1] / variances[0]
    passed = decreasing and ratio < 0.5 and control < 1e-10
    return _result(
        'qe_variance', ratio, 0.5, passed,
        'variances ' + ', '.join(f'{v:.3e}' for v in variances) +
        f', control {control:.1e}')


@acceptance('cutoff')
def check_cutoff(opts, seed, workers):
    results = cutoff_deviation_curve(opts['delta'], opts['r_cuts'],
                                     opts['lambda0'])
    dev = [r.deviation for r in results]
    decreasing = all(a > b for a, b in zip(dev[:-1], dev[1:]))
    passed = decreasing and dev[-1] < opts['tol']
    return _result('cutoff', dev[-1], opts['tol'], passed,
                   'deviations ' + ', '.join(f'{d:.2e}' for d in dev))


@acceptance('propagator')
def check_propagator(opts, seed, workers):
    t = np.linspace(0.1, 30.0, 300)
    bounded = all(
        np.all(np.abs(propagator_eigenvalue(t, s)) <= np.sqrt(ball_volume(t)) *
               (1 + 1e-12)) for s in opts['s'])
    constants = [propagator_lower_bound(s).constant for s in opts['s']]
    s = 1.0
    tt = np.arange(5.0, 80.0, 1e-3)
    f = propagator_asymptotic(tt, s)
    peaks = tt[1:-1][(f[1:-1] > f[:-2]) & (f[1:-1] > f[2:])]
    period_err = abs(np.diff(peaks).mean() - 4 * np.pi / s) / (4 * np.pi / s)
    passed = bounded and min(constants) > 0 and period_err < 0.01
    return _result(
        'propagator', period_err, 0.01, passed,
        'time-average constants ' + ', '.join(f'{c:.3f}' for c in constants))


@acceptance('superposition')
def check_superposition(opts, seed, workers):
    space = FlatTorus(2 * math.pi)
    basis = enumerate_window(space, SpectralWindow(opts['lambda0'],
                                                   opts['delta']))
    patch = PatchGrid.centered(3.0, 31)
    spec = SuperpositionSpec(basis, opts['samples'], patch, seed)
    err = superposition_covariance(spec, _probe(opts),
                                   workers=workers).max_error()
    points = SuperpositionSpec(basis, opts['point_samples'], patch,
                               spawn_seed(seed, 1))
    ks = gaussianity_report(superposition_point_values(points,
                                                       workers=workers)).ks
    radii = np.linspace(0.0, 5.0, 11)
    distances = [
        window_kernel_distance(
            enumerate_window(space, SpectralWindow(lam, 2 * math.sqrt(lam))),
            radii, opts['n_motions'], spawn_seed(seed, 2)).mean
        for lam in opts['kernel_lambda0']
    ]
    decreasing = all(a > b for a, b in zip(distances[:-1], distances[1:]))
    passed = err < opts['tol'] and ks < opts['ks'] and decreasing
    return _result(
        'superposition', err, opts['tol'], passed,
        f'KS {ks:.4f}, kernel distances ' +
        ', '.join(f'{d:.3f}' for d in distances))


@acceptance('nodal')
def check_nodal(opts, seed, workers):
    rng = np.random.default_rng(seed)
    agree = all(
        count_sign_domains(signs) == union_find_domains(signs)
        for signs in (rng.random((64, 64)) < 0.5
                      for _ in range(opts['grids'])))
    densities = []
    patch = PatchGrid.centered(opts['half_width'], opts['resolution'])
    for j, mu in enumerate((1.0, 2.0)):
        wave = build_wave(dict(type='EuclideanWave', mu=mu, n_directions=256))
        root = spawn_seed(seed, j + 1)
        reports = [
            nodal_count(wave.sample(patch, spawn_seed(root, i)), mu=mu)
            for i in range(opts['patches'])
        ]
        densities.append(nodal_statistics(reports)[0])
    ratio = densities[1] / densities[0]
    passed = agree and abs(ratio - 4.0) < 0.8
    return _result('nodal', abs(ratio - 4.0) / 4.0, 0.2, passed,
                   f'union-find {"agrees" if agree else "DIFFERS"}, '
                   f'density ratio {ratio:.3f}')


def run_checks(cfg, names=None, verbose=True):
    """Run the selected checks, all of them by default.

    Args:
        cfg (Config): Needs ``checks``, ``seed`` and ``workers``.
        names (list[str], optional): Subset of :data:`CHECKS`.

    Returns:
        list[CheckResult]
    """
    names = list(names or cfg.get('only') or CHECKS)
    unknown = set(names) - set(CHECKS)
    if unknown:
        raise ArgumentError(f'unknown checks {sorted(unknown)}')
    results = []
    order = list(CHECKS)
    for name in names:
        # seed index is the registration position, whatever the subset
        seed = spawn_seed(cfg.seed, order.index(name))
        try:
            result = CHECKS[name](cfg.checks[name], seed, cfg.workers)
        except (BSWavesError, ArithmeticError, ValueError) as e:
            print_log(f'check {name} raised {e!r}', logger='bswaves',
                      level=logging.ERROR)
            result = CheckResult(name, False, math.nan, math.nan,
                                 f'{type(e).__name__}: {e}')
        if verbose:
            tag = colored('PASS', 'green') if result.passed else colored(
                'FAIL', 'red')
            print(f'[{tag}] {name}: {result.value:.4g} '
                  f'(threshold {result.threshold:.4g}) {result.detail}')
        results.append(result)
    if verbose:
        n_pass = sum(r.passed for r in results)
        print(f'===> {n_pass}/{len(results)} checks passed')
    return results


@COMMANDS.register_module(name='verify')
class Verify(BaseCommand):
    config = 'verify.py'
    help = 'run the acceptance checks and report PASS/FAIL'
    flags = (('--scale', 'scale', ('full', 'quick'),
              'sample sizes of the checks'), )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--only', nargs='+', choices=list(CHECKS),
                            default=None, help='run only these checks')

    def update_config(self, cfg, args):
        super().update_config(cfg, args)
        if args.only:
            cfg.only = list(args.only)
        if cfg.scale == 'quick':
            cfg.merge_from_dict(dict(checks=cfg.quick))

    def run(self, cfg, paths):
        results = run_checks(cfg)
        paths.record('checks', write_table(
            paths.primary, RESULT_FIELDS, [r._asdict() for r in results],
            paths.fmt))
        return 0 if all(r.passed for r in results) else 1
