import mmcv
import numpy as np
import pytest

from models.geometry import PatchGrid
from models.utils import ArgumentError, FieldSample
from runner import (OutputPaths, RunManifest, file_digest, read_table,
                    write_field_sample, write_json, write_table)


class TestOutputPaths:

    def test_derived_names(self, tmp_path):
        paths = OutputPaths(str(tmp_path / 'cov.csv'))
        assert paths.stem == str(tmp_path / 'cov')
        assert paths.extra('square') == str(tmp_path / 'cov.square.csv')
        assert paths.extra('summary', 'json').endswith('cov.summary.json')
        assert paths.plot('covariance').endswith('cov.covariance.png')
        assert paths.manifest.endswith('cov.manifest.json')
        assert paths.log.endswith('cov.log')
        assert paths.config.endswith('cov.config.py')

    def test_no_extension(self, tmp_path):
        paths = OutputPaths(str(tmp_path / 'run'), 'json')
        assert paths.stem == str(tmp_path / 'run')
        assert paths.extra('modes') == str(tmp_path / 'run.modes.json')

    def test_prepare_creates_directory(self, tmp_path):
        paths = OutputPaths(str(tmp_path / 'a' / 'b' / 'out.csv'))
        paths.prepare()
        assert (tmp_path / 'a' / 'b').is_dir()

    def test_unknown_format(self, tmp_path):
        with pytest.raises(ArgumentError):
            OutputPaths(str(tmp_path / 'out.csv'), 'xlsx')


class TestTables:

    def test_csv_floats_round_trip(self, tmp_path):
        values = [0.1, 1 / 3, np.float64(2.0)**0.5, 1e-17]
        path = write_table(str(tmp_path / 't.csv'), ('i', 'x', 'ok'), [
            dict(i=np.int64(i), x=x, ok=np.bool_(i % 2 == 0))
            for i, x in enumerate(values)
        ])
        rows = read_table(path)
        assert [float(r['x']) for r in rows] == [float(v) for v in values]
        assert [r['i'] for r in rows] == ['0', '1', '2', '3']
        assert rows[0]['ok'] == 'True' and rows[1]['ok'] == 'False'

    def test_csv_line_endings(self, tmp_path):
        path = write_table(str(tmp_path / 't.csv'), ('a', ), [dict(a=1.5)])
        with open(path, 'rb') as f:
            assert f.read() == b'a\n1.5\n'

    def test_json(self, tmp_path):
        path = write_table(str(tmp_path / 't.json'), ('r', 'mean'),
                           [dict(r=np.float64(0.5), mean=np.float32(0.25))],
                           fmt='json')
        assert mmcv.load(path) == [dict(r=0.5, mean=0.25)]

    def test_field_sample(self, tmp_path):
        patch = PatchGrid.centered(1.0, 3)
        values = np.arange(9, dtype=float).reshape(3, 3)
        sample = FieldSample(patch, values, dict(type='Test'), 7)
        rows = read_table(write_field_sample(str(tmp_path / 's.csv'), sample))
        assert len(rows) == 9
        assert set(rows[0]) == {'u1', 'u2', 'value'}
        assert sorted(float(r['value']) for r in rows) == list(range(9))

    def test_digest_is_content_hash(self, tmp_path):
        a = write_json(str(tmp_path / 'a.json'), dict(b=1, a=np.float64(2)))
        b = write_json(str(tmp_path / 'b.json'), dict(a=2.0, b=1))
        assert file_digest(a) == file_digest(b)
        assert len(file_digest(a)) == 64


class TestManifest:

    def test_round_trip(self, tmp_path):
        out = write_table(str(tmp_path / 't.csv'), ('a', ), [dict(a=1)])
        cfg = mmcv.Config(dict(seed=5, patch=dict(half_width=2.0)))
        manifest = RunManifest.from_run('sample-wave', cfg, dict(table=out),
                                        1.5)
        path = manifest.dump(str(tmp_path / 'm.json'))
        loaded = RunManifest.load(path)
        assert loaded == manifest
        assert loaded.config['patch'] == dict(half_width=2.0)
        assert loaded.digests['table'] == file_digest(out)

    def test_plain_dict_config(self):
        manifest = RunManifest.from_run('cutoff', dict(seed=3, delta=0.5),
                                        {}, 0.0)
        assert manifest.seed == 3 and manifest.config['delta'] == 0.5

    def test_not_a_manifest(self, tmp_path):
        path = write_json(str(tmp_path / 'x.json'), dict(command='cutoff'))
        with pytest.raises(ArgumentError):
            RunManifest.load(path)
