import logging

from mmcv.utils import get_logger


def get_root_logger(log_file=None, log_level=logging.INFO, name='bswaves'):
    """Get root logger.

    Args:
        log_file (str, optional): File path of log. Defaults to None.
        log_level (int, optional): The level of logger.
            Defaults to logging.INFO.
        name (str, optional): The name of the root logger, also used as a
            prefix of child loggers. Defaults to 'bswaves'.

    Returns:
        :obj:`logging.Logger`: The obtained logger
    """
    return get_logger(name=name, log_file=log_file, log_level=log_level)


def attach_log_file(log_file, log_level=logging.INFO, name='bswaves'):
    """Add a file handler to an initialized logger and return it.

    ``get_logger`` only honors ``log_file`` on first use, so every CLI run
    attaches and later removes its own handler.
    """
    logger = get_root_logger(log_level=log_level, name=name)
    handler = logging.FileHandler(log_file, 'w')
    handler.setFormatter(
        logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
    handler.setLevel(log_level)
    logger.addHandler(handler)
    logger.setLevel(log_level)
    return handler


def detach_log_file(handler, name='bswaves'):
    logger = get_root_logger(name=name)
    logger.removeHandler(handler)
    handler.close()
