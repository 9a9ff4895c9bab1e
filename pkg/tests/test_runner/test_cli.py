import math

import mmcv
import numpy as np
import pytest

import run
from models.utils import NumericError
from runner import COMMANDS, RunManifest, read_table
from runner.verify import CHECKS, radial_residual


def cli(tmp_path, *argv, out='out.csv'):
    return run.main([*argv, '--out', str(tmp_path / out)])


class TestParser:

    def test_every_command_registered(self):
        assert set(COMMANDS.module_dict) == {
            'sample-wave', 'covariance', 'gaussianity', 'weyl-count',
            'transform', 'cutoff', 'propagator', 'qe-variance',
            'superposition', 'nodal', 'verify', 'replay'
        }

    def test_common_flags(self):
        args = run.parse_args(['covariance', '--seed', '3', '--samples',
                               '500', '--format', 'json', '--space',
                               'hyperbolic', '--s', '2'])
        assert (args.seed, args.samples, args.format) == (3, 500, 'json')
        assert args.space == 'hyperbolic' and args.s == 2.0

    def test_bad_choice_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            run.parse_args(['covariance', '--space', 'sphere'])
        assert exc.value.code == 2

    def test_flag_then_cfg_options(self):
        args = run.parse_args(['sample-wave', '--resolution', '11',
                               '--cfg-options', 'patch.resolution=9',
                               'seed=4'])
        cfg = run.load_config(args, COMMANDS.get('sample-wave')())
        assert cfg.patch.resolution == 9
        assert cfg.seed == 4
        assert cfg.patch.half_width == 10.0


class TestWeylCount:

    def test_small_window(self, tmp_path):
        status = cli(tmp_path, 'weyl-count', '--L', '6.2831853', '--lambda0',
                     '25', '--delta', '0.5')
        assert status == 0
        with open(tmp_path / 'out.csv') as f:
            assert f.readline() == 'lambda0,delta,count,prediction,rel_error\n'
        window, = read_table(str(tmp_path / 'out.csv'))
        assert window['count'] == '12'
        assert float(window['prediction']) == pytest.approx(math.pi, rel=1e-6)
        others = read_table(str(tmp_path / 'out.windows.csv'))
        assert {r['kind'] for r in others} == {'disc', 'schedule'}
        assert len([r for r in others if r['kind'] == 'disc']) == 3
        modes = read_table(str(tmp_path / 'out.modes.csv'))
        assert len(modes) == 12
        assert {(m['m'], m['n']) for m in modes} >= {('3', '4'), ('5', '0')}

    def test_numeric_failure_exits_3(self, tmp_path, monkeypatch):

        def fail(self, cfg, paths):
            raise NumericError('refinement capped', nodes=2**16)

        monkeypatch.setattr(COMMANDS.get('weyl-count'), 'run', fail)
        assert cli(tmp_path, 'weyl-count') == 3


class TestTransform:

    def test_table_header(self, tmp_path):
        status = cli(tmp_path, 'transform', '--profile', 'bump:1',
                     '--s-max', '2', '--num', '5')
        assert status == 0
        with open(tmp_path / 'out.csv') as f:
            assert f.readline() == 's,khat\n'
        rows = read_table(str(tmp_path / 'out.csv'))
        assert [float(r['s']) for r in rows] == [0.0, 0.5, 1.0, 1.5, 2.0]
        # the transform of a nonnegative profile peaks at s = 0
        khat = [float(r['khat']) for r in rows]
        assert khat[0] > 0 and khat[0] == max(khat)


class TestSampleWave:

    def test_outputs(self, tmp_path):
        status = cli(tmp_path, 'sample-wave', '--space', 'bessel',
                     '--half-width', '2', '--resolution', '21', '--samples',
                     '2', '--seed', '11')
        assert status == 0
        assert len(read_table(str(tmp_path / 'out.csv'))) == 21 * 21
        assert (tmp_path / 'out.sample1.csv').exists()
        assert (tmp_path / 'out.config.py').exists()
        assert (tmp_path / 'out.log').exists()
        manifest = RunManifest.load(str(tmp_path / 'out.manifest.json'))
        assert manifest.command == 'sample-wave' and manifest.seed == 11
        assert set(manifest.outputs) == {'sample', 'sample1'}
        assert manifest.config['wave']['type'] == 'BesselPolar'

    def test_same_seed_same_bytes(self, tmp_path):
        argv = ('sample-wave', '--half-width', '2', '--resolution', '15')
        cli(tmp_path, *argv, out='a.csv')
        cli(tmp_path, *argv, out='b.csv')
        assert (tmp_path / 'a.csv').read_bytes() == \
            (tmp_path / 'b.csv').read_bytes()

    def test_json_format(self, tmp_path):
        status = cli(tmp_path, 'sample-wave', '--resolution', '5',
                     '--format', 'json', out='s.json')
        assert status == 0
        sample = mmcv.load(str(tmp_path / 's.json'))
        assert sample['seed'] is not None

    def test_replay_reproduces_bytes(self, tmp_path):
        cli(tmp_path, 'sample-wave', '--half-width', '2', '--resolution',
            '15', '--samples', '2', '--plot', out='orig.csv')
        status = run.main([
            'replay', str(tmp_path / 'orig.manifest.json'), '--out',
            str(tmp_path / 'replay.csv')
        ])
        assert status == 0
        assert (tmp_path / 'orig.replay.csv').read_bytes() == \
            (tmp_path / 'orig.csv').read_bytes()
        rows = read_table(str(tmp_path / 'replay.csv'))
        assert {r['output'] for r in rows} == {
            'sample', 'sample1', 'sample_plot', 'sample1_plot'
        }
        assert all(r['match'] == 'True' for r in rows)

    def test_replay_detects_changed_output(self, tmp_path):
        cli(tmp_path, 'sample-wave', '--resolution', '5', out='orig.csv')
        manifest = RunManifest.load(str(tmp_path / 'orig.manifest.json'))
        manifest.digests['sample'] = '0' * 64
        manifest.dump(str(tmp_path / 'orig.manifest.json'))
        status = run.main([
            'replay', str(tmp_path / 'orig.manifest.json'), '--out',
            str(tmp_path / 'replay.csv')
        ])
        assert status == 1


class TestExitCodes:

    def test_invalid_seed(self, tmp_path):
        assert cli(tmp_path, 'sample-wave', '--seed', '-1') == 2

    def test_invalid_samples(self, tmp_path):
        assert cli(tmp_path, 'sample-wave', '--samples', '0') == 2

    def test_mu_on_hyperbolic_wave(self, tmp_path):
        assert cli(tmp_path, 'sample-wave', '--space', 'hyperbolic', '--mu',
                   '2') == 2

    def test_unwritable_output(self, tmp_path):
        blocker = tmp_path / 'file'
        blocker.write_text('')
        assert run.main(['weyl-count', '--out',
                         str(blocker / 'sub' / 'w.csv')]) == 2

    def test_malformed_workers_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv('BSWAVES_WORKERS', 'four')
        assert cli(tmp_path, 'covariance', '--samples', '10', '--radii',
                   '3') == 2

    def test_missing_config(self, tmp_path):
        assert cli(tmp_path, 'cutoff', '--config',
                   str(tmp_path / 'nope.py')) == 2


class TestNodal:

    def test_superposition_source(self, tmp_path):
        status = cli(tmp_path, 'nodal', '--source', 'superposition',
                     '--lambda0', '25', '--half-width', '8', '--resolution',
                     '41', '--samples', '3', '--seed', '5')
        assert status == 0
        rows = read_table(str(tmp_path / 'out.csv'))
        assert len(rows) == 3
        assert all(int(r['count']) >= 1 for r in rows)
        summary = mmcv.load(str(tmp_path / 'out.summary.json'))
        assert summary['patches'] == 3
        assert summary['mu'] == 1.0
        assert summary['mean_density'] > 0


class TestVerify:

    def test_radial_residual(self):
        r = np.linspace(0.1, 5.0, 20)
        for s in (0.5, 1.0, 2.0):
            assert radial_residual(s, r) < 1e-4

    def test_quick_subset(self, tmp_path):
        status = cli(tmp_path, 'verify', '--scale', 'quick', '--only',
                     'spherical_function', 'weyl_law')
        assert status == 0
        rows = read_table(str(tmp_path / 'out.csv'))
        assert [r['check'] for r in rows] == ['spherical_function',
                                              'weyl_law']
        assert all(r['passed'] == 'True' for r in rows)

    def test_quick_scale_merges_sizes(self):
        args = run.parse_args(['verify', '--scale', 'quick'])
        cfg = run.load_config(args, COMMANDS.get('verify')())
        assert cfg.checks.nodal.patches == 10
        assert cfg.checks.nodal.grids == 10
        # keys without a quick override keep their full value
        assert cfg.checks.cutoff.r_cuts == [5.0, 10.0, 20.0, 40.0]

    def test_failing_check_exits_1(self, tmp_path, monkeypatch):
        def broken(opts, seed, workers):
            raise NumericError('did not converge')

        monkeypatch.setitem(CHECKS, 'cutoff', broken)
        status = cli(tmp_path, 'verify', '--only', 'cutoff')
        assert status == 1
        row, = read_table(str(tmp_path / 'out.csv'))
        assert row['passed'] == 'False'
        assert 'NumericError' in row['detail']
