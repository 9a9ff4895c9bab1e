"""CLI commands, one registered class per subcommand.

A command declares its flags, maps them onto the config and runs on the
resolved config. Every numerical parameter lives in the config, so a run
is reproduced from its dumped config alone.
"""
import math

import numpy as np
from mmcv.utils import Registry

from loaders import (COVARIANCE_FIELDS, NODAL_FIELDS, SuperpositionSpec,
                     compare_modes, distribution_rows, eigenfunction_values,
                     empirical_covariance, gaussianity_report, nodal_count,
                     nodal_statistics, point_values, radial_probe,
                     sample_superposition, square_measure,
                     superposition_covariance, superposition_point_values,
                     window_kernel_distance)
from models.builder import build_wave
from models.geometry import FlatTorus, PatchGrid
from models.qe import TestKernel, parse_profile, variance_statistic
from models.qe.variance import CSV_FIELDS as QE_FIELDS
from models.spectral import (SpectralWindow, brute_force_window,
                             build_schedule, calibrate_plancherel,
                             count_window, cutoff_deviation_curve,
                             disc_window, enumerate_window,
                             fit_propagator_asymptotic,
                             propagator_eigenvalue, propagator_lower_bound,
                             round_trip_error, shrinking_windows,
                             spherical_transform_h2, weyl_window_count)
from models.spectral.propagator import ball_volume
from models.spectral.transforms import REFERENCE_HATS
from models.utils import ArgumentError, NumericError, spawn_seed
from .io import (write_field_sample, write_json, write_table)
from .plots import plot_curves, plot_field, plot_histogram

COMMANDS = Registry('command')

# --space choices and the wave configs they select
SPACE_WAVES = {
    'euclidean2': dict(type='EuclideanWave', mu=1.0, dim=2, n_directions=256),
    'euclidean3': dict(type='EuclideanWave', mu=1.0, dim=3, n_directions=256),
    'bessel': dict(type='BesselPolar', mu=1.0, n_modes=32),
    'hyperbolic': dict(type='HyperbolicWave', s=1.0, n_boundary=256),
    'sine': dict(type='InvariantSine', mu=1.0),
}

WEYL_FIELDS = ('lambda0', 'delta', 'count', 'prediction', 'rel_error')
# disc and schedule windows, written next to the counts
WINDOW_FIELDS = ('kind', 'lower', 'upper') + WEYL_FIELDS


def build_command(name):
    cls = COMMANDS.get(name)
    if cls is None:
        raise ArgumentError(f'unknown command {name!r}')
    return cls()


def linspace(cfg):
    return np.linspace(cfg['start'], cfg['stop'], int(cfg['num']))


def torus_basis(cfg):
    space = FlatTorus(cfg['L'])
    return enumerate_window(space, SpectralWindow(cfg['lambda0'],
                                                  cfg['delta']))


class BaseCommand:
    """Subcommand interface.

    ``flags`` lists ``(flag, config key, type, help)``; a flag given on the
    command line overwrites its key. ``config`` names the default config
    file under ``configs/``.
    """
    config = None
    help = ''
    flags = ()

    def add_arguments(self, parser):
        for flag, key, type_, help_ in self.flags:
            kwargs = dict(help=f'{help_} (config key `{key}`)', default=None)
            if type_ is list:
                kwargs.update(type=float, nargs='+')
            elif isinstance(type_, tuple):
                kwargs.update(choices=type_)
            else:
                kwargs.update(type=type_)
            parser.add_argument(flag, **kwargs)

    def update_config(self, cfg, args):
        options = {}
        for flag, key, _, _ in self.flags:
            value = getattr(args, flag.lstrip('-').replace('-', '_'))
            if value is not None:
                options[key] = value
        if options:
            cfg.merge_from_dict(options)

    def run(self, cfg, paths):
        """Write the outputs into ``paths``; return 0 or 1 (failed checks)."""
        raise NotImplementedError


class WaveCommand(BaseCommand):
    """Commands reading a wave sampler from ``cfg.wave``."""

    wave_flags = (
        ('--space', 'space', tuple(SPACE_WAVES), 'model space of the wave'),
        ('--mu', 'mu', float, 'frequency of Euclidean waves'),
        ('--s', 's', float, 'spectral parameter of hyperbolic waves'),
    )

    def add_arguments(self, parser):
        for flag, _, type_, help_ in self.wave_flags:
            if isinstance(type_, tuple):
                parser.add_argument(flag, choices=type_, default=None,
                                    help=help_)
            else:
                parser.add_argument(flag, type=type_, default=None,
                                    help=help_)
        super().add_arguments(parser)

    def update_config(self, cfg, args):
        if args.space is not None:
            cfg.wave = dict(SPACE_WAVES[args.space])
        wave_type = cfg.wave['type']
        if args.mu is not None:
            if wave_type == 'HyperbolicWave':
                raise ArgumentError('--mu does not apply to hyperbolic waves, '
                                    'use --s')
            cfg.wave['mu'] = args.mu
        if args.s is not None:
            if wave_type != 'HyperbolicWave':
                raise ArgumentError('--s only applies to hyperbolic waves')
            cfg.wave['s'] = args.s
        super().update_config(cfg, args)


@COMMANDS.register_module(name='sample-wave')
class SampleWave(WaveCommand):
    config = 'sample_wave.py'
    help = 'sample a Gaussian random wave on a grid patch'
    flags = (
        ('--half-width', 'patch.half_width', float, 'patch half width'),
        ('--resolution', 'patch.resolution', int, 'grid nodes per side'),
    )

    def run(self, cfg, paths):
        wave = build_wave(cfg.wave)
        patch = PatchGrid.centered(cfg.patch.half_width, cfg.patch.resolution)
        for i in range(cfg.samples):
            sample = wave.sample(patch, spawn_seed(cfg.seed, i))
            name = 'sample' if i == 0 else f'sample{i}'
            path = paths.primary if i == 0 else paths.extra(name)
            paths.record(name, write_field_sample(path, sample, paths.fmt))
            if cfg.plot:
                paths.record(f'{name}_plot',
                             plot_field(paths.plot(name), sample,
                                        title=cfg.wave['type']))
        return 0


@COMMANDS.register_module(name='covariance')
class Covariance(WaveCommand):
    config = 'covariance.py'
    help = 'binned two-point covariance against the analytic kernel'
    flags = (
        ('--r-max', 'probe.r_max', float, 'largest probe radius'),
        ('--radii', 'probe.num', int, 'number of probe radii'),
        ('--rays', 'probe.n_rays', int, 'rays per radius'),
    )

    def run(self, cfg, paths):
        probe = radial_probe(
            np.linspace(0.0, cfg.probe.r_max, cfg.probe.num),
            n_rays=cfg.probe.n_rays)
        est = empirical_covariance(cfg.wave, probe, cfg.samples, cfg.seed,
                                   chunk=cfg.chunk, workers=cfg.workers,
                                   progress=True)
        paths.record('covariance', write_table(paths.primary,
                                               COVARIANCE_FIELDS, est.rows(),
                                               paths.fmt))
        if cfg.plot:
            keep = est.valid
            paths.record(
                'covariance_plot',
                plot_curves(paths.plot('covariance'), est.radii[keep],
                            dict(empirical=est.mean[keep],
                                 theoretical=est.theoretical[keep]),
                            'r', 'E[F(0) F(r)]',
                            errors=dict(empirical=est.stderr[keep])))
        return 0


@COMMANDS.register_module(name='gaussianity')
class Gaussianity(WaveCommand):
    config = 'gaussianity.py'
    help = 'one-point value distribution, energy and square measure'
    flags = (
        ('--source', 'source', ('wave', 'eigenfunction'),
         'read a wave sampler or a torus window function'),
        ('--cutoff', 'cutoff', float, 'tail mass threshold'),
        ('--lambda0', 'torus.lambda0', float, 'window center'),
        ('--delta', 'torus.delta', float, 'window half width'),
        ('--L', 'torus.L', float, 'torus side'),
    )

    def run(self, cfg, paths):
        if cfg.source == 'wave':
            values = point_values(cfg.wave, cfg.samples, cfg.seed,
                                  workers=cfg.workers)
        else:
            values = eigenfunction_values(torus_basis(cfg.torus),
                                          cfg.samples, cfg.seed)
        report = gaussianity_report(values, cutoff=cfg.cutoff)
        measure = square_measure(values, cfg.K_grid)
        rows = distribution_rows(report)
        rows.append(dict(moment='deficit', value=measure.deficit))
        paths.record('gaussianity', write_table(paths.primary,
                                                ('moment', 'value'), rows,
                                                paths.fmt))
        paths.record(
            'square_measure',
            write_table(paths.extra('square'), ('K', 'tail'), [
                dict(K=float(k), tail=float(t))
                for k, t in zip(measure.K, measure.tail)
            ], paths.fmt))
        print(f'===> KS distance to N(0, 1): {report.ks:.4f}, '
              f'energy {report.energy:.4f}')
        if cfg.plot:
            paths.record('histogram', plot_histogram(paths.plot('histogram'),
                                                     values))
        return 0


@COMMANDS.register_module(name='weyl-count')
class WeylCount(BaseCommand):
    config = 'weyl_count.py'
    help = 'torus eigenvalue counts in spectral windows'
    flags = (
        ('--L', 'L', float, 'torus side'),
        ('--lambda0', 'lambda0', float, 'window center'),
        ('--delta', 'delta', float, 'window half width'),
    )

    def update_config(self, cfg, args):
        super().update_config(cfg, args)
        if args.lambda0 is not None or args.delta is not None:
            cfg.windows = [dict(lambda0=cfg.lambda0, delta=cfg.delta)]

    def _row(self, kind, space, window, brute_force):
        weyl = weyl_window_count(space, window)
        if brute_force:
            exact = len(brute_force_window(space, window))
            if exact != weyl.count:
                raise NumericError('window count disagrees with brute force',
                                   count=weyl.count, brute_force=exact,
                                   lambda0=window.lambda0)
        return dict(kind=kind, lambda0=window.lambda0, delta=window.delta,
                    lower=window.lower, upper=window.upper, count=weyl.count,
                    prediction=weyl.prediction, rel_error=weyl.rel_error)

    def run(self, cfg, paths):
        space = FlatTorus(cfg.L)
        rows = [
            self._row('window', space, SpectralWindow(w['lambda0'],
                                                      w['delta']),
                      cfg.brute_force) for w in cfg.windows
        ]
        rows += [
            self._row('disc', space, disc_window(upper), False)
            for upper in cfg.disc
        ]
        if cfg.get('schedule'):
            sched = cfg.schedule
            schedule = build_schedule(sched['R'], sched['c_prime'],
                                      sched['beta_prime'])
            rows += [
                self._row('schedule', space, w, False)
                for w in shrinking_windows(sched['lambda0'], schedule)
            ]
        for row in rows:
            print(f"===> {row['kind']} [{row['lower']:g}, {row['upper']:g}]: "
                  f"{row['count']} (Weyl {row['prediction']:.3f})")
        counts = [r for r in rows if r['kind'] == 'window']
        others = [r for r in rows if r['kind'] != 'window']
        paths.record('counts', write_table(paths.primary, WEYL_FIELDS, counts,
                                           paths.fmt))
        if others:
            paths.record('windows', write_table(paths.extra('windows'),
                                                WINDOW_FIELDS, others,
                                                paths.fmt))
        first = cfg.windows[0] if cfg.windows else None
        if first is not None:
            window = SpectralWindow(first['lambda0'], first['delta'])
            if count_window(space, window) <= cfg.max_listed:
                basis = enumerate_window(space, window)
                paths.record(
                    'modes',
                    write_table(paths.extra('modes'),
                                ('m', 'n', 'kind', 'eigenvalue'),
                                basis.to_rows(), paths.fmt))
        return 0


@COMMANDS.register_module(name='transform')
class Transform(BaseCommand):
    config = 'transform.py'
    help = 'spherical transform tables and Plancherel calibration'
    flags = (
        ('--profile', 'profile', str, "radial profile, 'box:M' or 'bump:M'"),
        ('--s-max', 's_grid.stop', float, 'largest spectral parameter'),
        ('--num', 's_grid.num', int, 'number of spectral parameters'),
    )

    def run(self, cfg, paths):
        kernel = parse_profile(cfg.profile)
        s = linspace(cfg.s_grid)
        hat = spherical_transform_h2(kernel, s)
        paths.record('transform', write_table(
            paths.primary, ('s', 'khat'),
            [dict(s=a, khat=b) for a, b in zip(s, hat)], paths.fmt))
        rows = []
        for reference in cfg.references:
            cal = calibrate_plancherel(reference)
            hat_ref, s_max = REFERENCE_HATS[reference]
            err = round_trip_error(hat_ref, s[s <= s_max], s_max)
            rows.append(dict(reference=reference, constant=cal.constant,
                             theoretical=cal.theoretical, spread=cal.spread,
                             rel_deviation=cal.rel_deviation,
                             round_trip=err))
            print(f'===> Plancherel constant ({reference}): '
                  f'{cal.constant:.10f}, round trip {err:.2e}')
        paths.record('plancherel', write_table(
            paths.extra('plancherel'),
            ('reference', 'constant', 'theoretical', 'spread',
             'rel_deviation', 'round_trip'), rows, paths.fmt))
        if cfg.plot:
            paths.record('transform_plot', plot_curves(
                paths.plot('transform'), s, dict(transform=hat), 's',
                'transform'))
        return 0


@COMMANDS.register_module(name='cutoff')
class Cutoff(BaseCommand):
    config = 'cutoff.py'
    help = 'deviation of truncated cutoff kernels from the spectral bump'
    flags = (
        ('--delta', 'delta', float, 'plateau half width'),
        ('--lambda0', 'lambda0', float, 'window center, > 1/4'),
        ('--r-cuts', 'r_cuts', list, 'truncation radii'),
    )

    def run(self, cfg, paths):
        results = cutoff_deviation_curve(cfg.delta, cfg.r_cuts, cfg.lambda0)
        rows = [
            dict(r_cut=r.r_cut, delta=r.delta, lambda0=r.lambda0,
                 deviation=r.deviation) for r in results
        ]
        paths.record('deviation', write_table(
            paths.primary, ('r_cut', 'delta', 'lambda0', 'deviation'), rows,
            paths.fmt))
        last = results[-1]
        paths.record('profile', write_table(
            paths.extra('profile'), ('s', 'transform', 'target'), [
                dict(s=a, transform=b, target=c)
                for a, b, c in zip(last.s_grid, last.hat, last.target)
            ], paths.fmt))
        if cfg.plot:
            paths.record('deviation_plot', plot_curves(
                paths.plot('deviation'), [r.r_cut for r in results],
                dict(deviation=[r.deviation for r in results]), 'r_cut',
                'max deviation', logy=True))
        return 0


@COMMANDS.register_module(name='propagator')
class Propagator(BaseCommand):
    config = 'propagator.py'
    help = 'propagator eigenvalues, time averages and asymptotic fits'
    flags = (
        ('--s', 's_values', list, 'spectral parameters'),
        ('--t-max', 't.stop', float, 'largest time of the table'),
        ('--horizons', 'horizons', list, 'time-average horizons'),
    )

    def run(self, cfg, paths):
        t = linspace(cfg.t)
        root_volume = np.sqrt(ball_volume(t))
        rows, averages, fits = [], [], []
        for s in cfg.s_values:
            h = propagator_eigenvalue(t, s)
            rows += [
                dict(t=a, s=float(s), h=b, root_volume=c)
                for a, b, c in zip(t, h, root_volume)
            ]
            bound = propagator_lower_bound(s, tuple(cfg.horizons))
            averages += [
                dict(s=float(s), horizon=T, average=float(a),
                     constant=bound.constant)
                for T, a in zip(bound.horizons, bound.averages)
            ]
            if cfg.fit:
                fit = fit_propagator_asymptotic(s)
                fits.append(dict(s=float(s), B_real=fit.B.real,
                                 B_imag=fit.B.imag, offset=fit.offset,
                                 scaled_residual=fit.scaled_residual))
        paths.record('eigenvalues', write_table(
            paths.primary, ('t', 's', 'h', 'root_volume'), rows, paths.fmt))
        paths.record('averages', write_table(
            paths.extra('averages'), ('s', 'horizon', 'average', 'constant'),
            averages, paths.fmt))
        if fits:
            paths.record('fit', write_table(
                paths.extra('fit'),
                ('s', 'B_real', 'B_imag', 'offset', 'scaled_residual'), fits,
                paths.fmt))
        if cfg.plot:
            curves = {
                f's={s:g}': [r['h'] for r in rows if r['s'] == s]
                for s in cfg.s_values
            }
            curves['sqrt vol'] = root_volume
            paths.record('eigenvalues_plot', plot_curves(
                paths.plot('eigenvalues'), t, curves, 't', 'h_t(s)'))
        return 0


@COMMANDS.register_module(name='qe-variance')
class QEVariance(BaseCommand):
    config = 'qe_variance.py'
    help = 'matrix elements of a test kernel over a torus window'
    flags = (
        ('--L', 'L', float, 'torus side'),
        ('--lambda0', 'lambda0', float, 'window center'),
        ('--delta', 'delta', float, 'window half width'),
        ('--amplitude', 'amplitude', str, "amplitude, e.g. 'cos1', 'bump:0.01'"),
        ('--profile', 'profile', str, "radial profile, e.g. 'box:1'"),
    )

    def _report(self, cfg, lambda0):
        space = FlatTorus(cfg.L)
        basis = enumerate_window(space, SpectralWindow(lambda0, cfg.delta))
        kernel = TestKernel(space, cfg.amplitude, cfg.profile)
        return variance_statistic(basis, kernel, exact=cfg.exact)

    def run(self, cfg, paths):
        report = self._report(cfg, cfg.lambda0)
        paths.record('elements', write_table(paths.primary, QE_FIELDS,
                                             report.rows(), paths.fmt))
        paths.record('summary', write_json(paths.extra('summary', 'json'),
                                           report.summary()))
        print(f'===> {report.count} eigenfunctions, variance '
              f'{report.variance:.4e}')
        sweep = []
        for lambda0 in cfg.sweep:
            other = self._report(cfg, lambda0)
            sweep.append(dict(lambda0=float(lambda0), count=other.count,
                              variance=other.variance,
                              variance_centerj=other.variance_centerj))
        if sweep:
            paths.record('sweep', write_table(
                paths.extra('sweep'),
                ('lambda0', 'count', 'variance', 'variance_centerj'), sweep,
                paths.fmt))
            if cfg.plot:
                paths.record('sweep_plot', plot_curves(
                    paths.plot('sweep'), [r['lambda0'] for r in sweep],
                    dict(variance=[r['variance'] for r in sweep]), 'lambda0',
                    'variance', logy=True))
        return 0


def superposition_spec(cfg, n_draws, seed, mode=None, patch=None):
    """Superposition process of the window in ``cfg`` (keys L, lambda0, delta)."""
    patch = patch or cfg.patch
    return SuperpositionSpec(
        torus_basis(cfg), n_draws,
        PatchGrid.centered(patch['half_width'], patch['resolution']), seed,
        mode or cfg.get('mode', 'beta'), cfg.get('n_reads', 1))


@COMMANDS.register_module(name='superposition')
class Superposition(BaseCommand):
    config = 'superposition.py'
    help = 'alpha/beta superposition processes and the window kernel'
    flags = (
        ('--L', 'L', float, 'torus side'),
        ('--lambda0', 'lambda0', float, 'window center'),
        ('--delta', 'delta', float, 'window half width'),
        ('--mode', 'mode', ('alpha', 'beta'), 'randomization'),
        ('--reads', 'n_reads', int, 'base points per function in alpha mode'),
    )

    def run(self, cfg, paths):
        spec = superposition_spec(cfg, cfg.samples, cfg.seed)
        probe = radial_probe(
            np.linspace(0.0, cfg.probe.r_max, cfg.probe.num),
            n_rays=cfg.probe.n_rays)
        est = superposition_covariance(spec, probe, workers=cfg.workers)
        paths.record('covariance', write_table(
            paths.primary, COVARIANCE_FIELDS, est.rows(), paths.fmt))
        print(f'===> {spec.k} window functions, covariance max error '
              f'{est.max_error():.4f}')

        point_spec = superposition_spec(cfg, cfg.point_samples,
                                        spawn_seed(cfg.seed, 1))
        report = gaussianity_report(
            superposition_point_values(point_spec, workers=cfg.workers))
        paths.record('gaussianity', write_table(
            paths.extra('gaussianity'), ('moment', 'value'),
            distribution_rows(report), paths.fmt))

        kd = cfg.kernel_distance
        radii = np.linspace(0.0, kd['r_max'], kd['num'])
        rows = []
        for lambda0 in kd['lambda0']:
            delta = kd['width'] * math.sqrt(lambda0)
            basis = enumerate_window(FlatTorus(cfg.L),
                                     SpectralWindow(lambda0, delta))
            dist = window_kernel_distance(basis, radii, kd['n_motions'],
                                          spawn_seed(cfg.seed, 2))
            rows.append(dict(lambda0=float(lambda0), delta=delta,
                             k=len(basis), distance=dist.mean))
        paths.record('kernel_distance', write_table(
            paths.extra('kernel'), ('lambda0', 'delta', 'k', 'distance'),
            rows, paths.fmt))

        if cfg.compare:
            other = 'alpha' if spec.mode == 'beta' else 'beta'
            second = superposition_covariance(
                superposition_spec(cfg, cfg.samples, spawn_seed(cfg.seed, 3),
                                   mode=other), probe, workers=cfg.workers)
            cmp = compare_modes(est, second)
            paths.record('modes', write_table(
                paths.extra('modes'), ('max_difference', 'max_z'),
                [cmp._asdict()], paths.fmt))

        sample = sample_superposition(spec, 0)
        paths.record('sample', write_field_sample(paths.extra('sample'),
                                                  sample, paths.fmt))
        if cfg.plot:
            paths.record('sample_plot', plot_field(paths.plot('sample'),
                                                   sample))
        return 0


@COMMANDS.register_module(name='nodal')
class Nodal(WaveCommand):
    config = 'nodal.py'
    help = 'nodal domain counts of wave or superposition patches'
    flags = (
        ('--source', 'source', ('wave', 'superposition'), 'field source'),
        ('--half-width', 'patch.half_width', float, 'patch half width'),
        ('--resolution', 'patch.resolution', int, 'grid nodes per side'),
        ('--lambda0', 'superposition.lambda0', float,
         'window center of superpositions'),
    )

    def _samples(self, cfg):
        patch = PatchGrid.centered(cfg.patch.half_width, cfg.patch.resolution)
        if cfg.source == 'superposition':
            spec = superposition_spec(cfg.superposition, cfg.samples,
                                      cfg.seed, patch=cfg.patch)
            return 1.0, (sample_superposition(spec, i)
                         for i in range(cfg.samples))
        wave = build_wave(cfg.wave)
        return getattr(wave, 'mu', None), (
            wave.sample(patch, spawn_seed(cfg.seed, i))
            for i in range(cfg.samples))

    def run(self, cfg, paths):
        mu, samples = self._samples(cfg)
        reports = [nodal_count(sample, mu=mu) for sample in samples]
        rows = [
            dict(count=r.domain_count, touching=r.boundary_touching,
                 area=r.patch_area, density=r.count_density) for r in reports
        ]
        paths.record('nodal', write_table(paths.primary, NODAL_FIELDS, rows,
                                          paths.fmt))
        if len(reports) > 1:
            mean, stderr = nodal_statistics(reports)
            print(f'===> nodal count density {mean:.5f} +- {stderr:.5f}')
            paths.record('summary', write_json(
                paths.extra('summary', 'json'),
                dict(mean_density=mean, stderr=stderr, patches=len(reports),
                     mu=mu)))
        return 0
