import logging
import os.path as osp
import time

from mmcv import Config
from mmcv.utils import print_log

from models.utils import ArgumentError, attach_log_file, detach_log_file
from .commands import COMMANDS, BaseCommand, build_command
from .io import OutputPaths, write_table
from .manifest import RunManifest

REPLAY_FIELDS = ('output', 'original', 'replayed', 'match')


def execute(name, cfg, paths):
    """Run command ``name`` on a resolved config and dump its manifest.

    The resolved config goes to ``paths.config`` and the log of the run to
    ``paths.log``.

    Returns:
        tuple[int, RunManifest]: Exit status of the command and manifest.
    """
    command = build_command(name)
    paths.prepare()
    handler = attach_log_file(paths.log, cfg.get('log_level', 'INFO'))
    try:
        with open(paths.config, 'w') as f:
            f.write(cfg.pretty_text)
        print_log(f'Config:\n{cfg.pretty_text}', logger='bswaves',
                  level=logging.DEBUG)
        print_log(f'{name} with seed {cfg.seed}, outputs at {paths.stem}',
                  logger='bswaves')
        start = time.time()
        status = command.run(cfg, paths)
        manifest = RunManifest.from_run(name, cfg, paths.written,
                                        time.time() - start)
        manifest.dump(paths.manifest)
        print_log(f'{name} finished in {manifest.duration:.1f}s',
                  logger='bswaves')
    finally:
        detach_log_file(handler)
    return status, manifest


def replay_out(manifest_path, manifest):
    """Default output of a replay: next to the original, tagged ``.replay``."""
    stem = manifest_path[:-len('.manifest.json')] if manifest_path.endswith(
        '.manifest.json') else osp.splitext(manifest_path)[0]
    fmt = manifest.config.get('out_format', 'csv')
    return f'{stem}.replay.{fmt}', fmt


@COMMANDS.register_module(name='replay')
class Replay(BaseCommand):
    """Rerun a manifest and compare the output digests.

    The replayed outputs go to ``<stem>.replay.*`` unless ``--replay-out`` is
    given; the comparison table goes to ``--out``.
    """
    config = 'replay.py'
    help = 'rerun a recorded run and compare its outputs byte for byte'

    def add_arguments(self, parser):
        parser.add_argument('manifest', help='manifest.json of the run')
        parser.add_argument('--replay-out', default=None,
                            help='primary output of the replayed run')

    def update_config(self, cfg, args):
        cfg.manifest = args.manifest
        cfg.replay_out = args.replay_out

    def run(self, cfg, paths):
        original = RunManifest.load(cfg.manifest)
        if original.command == 'replay':
            raise ArgumentError('cannot replay a replay')
        out, fmt = replay_out(cfg.manifest, original)
        replay_paths = OutputPaths(cfg.get('replay_out') or out, fmt)
        _, replayed = execute(original.command, Config(original.config),
                              replay_paths)
        rows = []
        for name in sorted(set(original.digests) | set(replayed.digests)):
            a = original.digests.get(name, '')
            b = replayed.digests.get(name, '')
            rows.append(dict(output=name, original=a, replayed=b,
                             match=bool(a) and a == b))
        paths.record('replay', write_table(paths.primary, REPLAY_FIELDS,
                                           rows, paths.fmt))
        if original.version != replayed.version:
            print_log(f'recorded with {original.version}, replayed with '
                      f'{replayed.version}', logger='bswaves')
        n_match = sum(r['match'] for r in rows)
        print(f'===> {n_match}/{len(rows)} outputs reproduced')
        return 0 if n_match == len(rows) else 1
