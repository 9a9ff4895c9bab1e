"""Output paths and table writers.

Floats are written with ``repr`` so a CSV round-trips to the same doubles
and reruns with the same seed produce identical bytes.
"""
import csv
import hashlib
import os.path as osp

import mmcv
import numpy as np

from models.utils import ArgumentError

FORMATS = ('csv', 'json')
FIELD_SAMPLE_FIELDS = ('u1', 'u2', 'value')


class OutputPaths:
    """Files of one run, all derived from the ``--out`` path.

    ``--out results/cov.csv`` gives ``results/cov.csv`` for the main table,
    ``results/cov.<name>.csv`` for extra tables, ``results/cov.manifest.json``,
    ``results/cov.log``, ``results/cov.config.py`` and ``results/cov.<name>.png``.
    """

    def __init__(self, out, fmt='csv'):
        if fmt not in FORMATS:
            raise ArgumentError(f'format must be one of {FORMATS}, got {fmt!r}')
        self.fmt = fmt
        stem, ext = osp.splitext(out)
        self.stem = stem if ext in ('.csv', '.json') else out
        self.primary = out
        self.written = {}

    def extra(self, name, fmt=None):
        return f'{self.stem}.{name}.{fmt or self.fmt}'

    def plot(self, name):
        return f'{self.stem}.{name}.png'

    @property
    def manifest(self):
        return f'{self.stem}.manifest.json'

    @property
    def log(self):
        return f'{self.stem}.log'

    @property
    def config(self):
        return f'{self.stem}.config.py'

    def prepare(self):
        """Create the output directory; unwritable locations raise OSError."""
        mmcv.mkdir_or_exist(osp.dirname(osp.abspath(self.primary)))

    def record(self, name, path):
        self.written[name] = path
        return path


def _cell(value):
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return str(value)


def _plain(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    return value


def write_table(path, fields, rows, fmt='csv'):
    """Write ``rows`` (dicts keyed by ``fields``) as CSV or a JSON list."""
    rows = [{k: _plain(row[k]) for k in fields} for row in rows]
    if fmt == 'json':
        mmcv.dump(rows, path, file_format='json', indent=1)
        return path
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(fields)
        for row in rows:
            writer.writerow([_cell(row[k]) for k in fields])
    return path


def read_table(path):
    """Rows of a CSV written by :func:`write_table`, values as strings."""
    with open(path, newline='') as f:
        return list(csv.DictReader(f))


def write_field_sample(path, sample, fmt='csv'):
    if fmt == 'json':
        mmcv.dump(sample.to_dict(), path, file_format='json')
        return path
    rows = [dict(zip(FIELD_SAMPLE_FIELDS, row)) for row in sample.rows()]
    return write_table(path, FIELD_SAMPLE_FIELDS, rows)


def write_json(path, obj):
    mmcv.dump(jsonable(obj), path, file_format='json', indent=1,
              sort_keys=True)
    return path


def jsonable(obj):
    """Nested dicts and lists of plain python values."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return _plain(obj)


def file_digest(path):
    with open(path, 'rb') as f:
        return hashlib.sha256(f.read()).hexdigest()
