"""Command line entry point.

    python run.py <command> [--seed N] [--samples N] [--out PATH]
                            [--format csv|json] [--config FILE]
                            [--cfg-options key=value ...] [command flags]

Exit status: 0 on success, 1 when a check or replay failed, 2 on invalid
arguments or unwritable outputs, 3 on numerical failures.
"""
import argparse
import os.path as osp
import sys

from mmcv import Config, DictAction

from models.utils import (ArgumentError, BSWavesError, NumericError, check_seed,
                          get_root_logger)
from runner import COMMANDS, FORMATS, OutputPaths, build_command, execute

CONFIG_DIR = osp.join(osp.dirname(osp.abspath(__file__)), 'configs')


def common_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--seed', type=int, default=None, help='root seed')
    parser.add_argument('--samples', type=int, default=None,
                        help='number of realizations or draws')
    parser.add_argument('--out', default=None,
                        help='primary output, default work_dirs/<command>')
    parser.add_argument('--format', choices=FORMATS, default=None,
                        help='table format of the outputs')
    parser.add_argument('--config', default=None,
                        help='config file replacing configs/<command>.py')
    parser.add_argument(
        '--cfg-options',
        nargs='+',
        action=DictAction,
        help='override some settings in the used config, the key-value pair '
        'in xxx=yyy format will be merged into config file. If the value to '
        'be overwritten is a list, it should be like key="[a,b]" or key=a,b '
        'Note that the quotation marks are necessary and that no white space '
        'is allowed.')
    parser.add_argument('--workers', type=int, default=None,
                        help='data loader workers, 0 runs in process')
    parser.add_argument('--plot', action='store_true',
                        help='write png figures next to the tables')
    return parser


def parse_args(argv=None):
    parser = argparse.ArgumentParser(
        prog='bswaves',
        description='Random waves, spectral windows and their statistics')
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    parent = common_parser()
    for name in sorted(COMMANDS.module_dict):
        command = build_command(name)
        sub = subparsers.add_parser(name, parents=[parent], help=command.help)
        command.add_arguments(sub)
    return parser.parse_args(argv)


def load_config(args, command):
    cfg = Config.fromfile(args.config or osp.join(CONFIG_DIR, command.config))
    if args.seed is not None:
        cfg.seed = args.seed
    if args.samples is not None:
        cfg.samples = args.samples
    if args.format is not None:
        cfg.out_format = args.format
    if args.workers is not None:
        cfg.workers = args.workers
    if args.plot:
        cfg.plot = True
    command.update_config(cfg, args)
    if args.cfg_options is not None:
        cfg.merge_from_dict(args.cfg_options)
    check_seed(cfg.seed)
    if int(cfg.samples) < 1:
        raise ArgumentError(f'samples must be >= 1, got {cfg.samples}')
    return cfg


def main(argv=None):
    args = parse_args(argv)
    logger = get_root_logger()
    try:
        command = build_command(args.command)
        cfg = load_config(args, command)
        out = args.out or osp.join(
            cfg.get('work_dirs', './work_dirs'),
            f'{args.command}.{cfg.out_format}')
        status, _ = execute(args.command, cfg,
                            OutputPaths(out, cfg.out_format))
    except NumericError as e:
        logger.error(f'numerical failure: {e}')
        return 3
    except BSWavesError as e:
        logger.error(str(e))
        return 2
    except OSError as e:
        logger.error(f'cannot write outputs: {e}')
        return 2
    return status


if __name__ == '__main__':
    sys.exit(main())
