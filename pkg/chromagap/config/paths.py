import os
from pathlib import Path


def get_config_dir() -> Path:
    """Get configuration directory path"""
    config_home = os.environ.get('XDG_CONFIG_HOME')
    if config_home:
        return Path(config_home) / 'chromagap'

    return Path.home() / '.chromagap'


def get_config_file() -> Path:
    """Get configuration file path, honouring CHROMAGAP_CONFIG"""
    explicit = os.environ.get('CHROMAGAP_CONFIG')
    if explicit:
        return Path(explicit)
    return get_config_dir() / 'config.yaml'


def get_data_dir() -> Path:
    """Get data directory path"""
    data_home = os.environ.get('XDG_DATA_HOME')
    if data_home:
        return Path(data_home) / 'chromagap'

    return get_config_dir()


def get_logs_dir() -> Path:
    """Get logs directory path"""
    return get_data_dir() / 'logs'


def initialize_directories() -> None:
    """Create the data and log directories"""
    from ..utils.file_utils import ensure_directory

    for directory in (get_data_dir(), get_logs_dir()):
        ensure_directory(directory)
