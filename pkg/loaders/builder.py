import os

from mmcv.utils import Registry, build_from_cfg
from torch.utils.data import DataLoader

from models.utils import ArgumentError

DATASETS = Registry('dataset')

WORKERS_ENV = 'BSWAVES_WORKERS'


def build_dataset(cfg, default_args=None):
    return build_from_cfg(cfg, DATASETS, default_args)


def resolve_workers(workers=0):
    """Worker count, overridden by the ``BSWAVES_WORKERS`` environment variable."""
    env = os.environ.get(WORKERS_ENV)
    if env is not None and env.strip():
        try:
            workers = int(env)
        except ValueError:
            raise ArgumentError(
                f'{WORKERS_ENV} must be an integer, got {env!r}') from None
    return max(0, int(workers))


def collate_list(batch):
    return list(batch)


def build_dataloader(dataset, samples_per_batch=1, workers=0, **kwargs):
    """Build a PyTorch DataLoader over a seeded dataset.

    Items are pure functions of their index, so the loader never shuffles
    and needs no worker seeding: any number of workers yields the same
    items in the same order.

    Args:
        dataset (Dataset): A dataset whose items are numpy records.
        samples_per_batch (int): Items per batch.
        workers (int): Subprocesses used for loading, see
            :func:`resolve_workers`.
        kwargs: any keyword argument to be used to initialize DataLoader

    Returns:
        DataLoader: A PyTorch dataloader yielding lists of items.
    """
    num_workers = resolve_workers(workers)
    return DataLoader(
        dataset,
        batch_size=samples_per_batch,
        shuffle=False,
        num_workers=num_workers,
        collate_fn=collate_list,
        pin_memory=False,
        **kwargs)
