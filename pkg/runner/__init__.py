from .commands import COMMANDS, BaseCommand, WaveCommand, build_command
from .io import (FORMATS, OutputPaths, file_digest, read_table,
                 write_field_sample, write_json, write_table)
from .launcher import Replay, execute
from .manifest import RunManifest
from .verify import CHECKS, CheckResult, Verify, run_checks
from .version import __version__, short_version

__all__ = [
    'COMMANDS', 'BaseCommand', 'WaveCommand', 'build_command', 'FORMATS',
    'OutputPaths', 'file_digest', 'read_table', 'write_field_sample',
    'write_json', 'write_table', 'execute', 'Replay', 'RunManifest',
    'CHECKS', 'CheckResult', 'Verify', 'run_checks', '__version__',
    'short_version'
]
