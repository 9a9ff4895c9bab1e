from dataclasses import asdict, dataclass, field

import mmcv

from models.utils import ArgumentError
from .io import file_digest, jsonable
from .version import __version__


@dataclass
class RunManifest:
    """Everything needed to rerun a command.

    ``outputs`` maps output names to paths and ``digests`` the same names
    to SHA-256 hashes of the written bytes; a replay with the same version
    must reproduce every digest.
    """
    command: str
    config: dict
    seed: int
    version: str = __version__
    outputs: dict = field(default_factory=dict)
    digests: dict = field(default_factory=dict)
    duration: float = 0.0

    @classmethod
    def from_run(cls, command, cfg, outputs, duration):
        return cls(
            command=command,
            config=jsonable(cfg.to_dict() if hasattr(cfg, 'to_dict') else
                            dict(cfg)),
            seed=int(cfg['seed']),
            outputs=dict(outputs),
            digests={k: file_digest(v) for k, v in outputs.items()},
            duration=float(duration))

    def dump(self, path):
        mmcv.dump(asdict(self), path, file_format='json', indent=1,
                  sort_keys=True)
        return path

    @classmethod
    def load(cls, path):
        data = mmcv.load(path, file_format='json')
        missing = {'command', 'config', 'seed'} - set(data)
        if missing:
            raise ArgumentError(
                f'{path} is not a run manifest, missing {sorted(missing)}')
        return cls(**data)
