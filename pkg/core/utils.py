"""
Utility functions for the core app.

Helpers for reading key=value config files and writing result files
atomically.
"""

import logging
import os
import tempfile
from pathlib import Path
from typing import Dict, Union

from dotenv.parser import parse_stream

logger = logging.getLogger(__name__)


class ConfigFileError(ValueError):
    """Malformed key=value configuration file."""


def normalize_option_name(name: str) -> str:
    """
    Map a flag name to its option key.

    '--max-dist', 'max-dist' and 'max_dist' all become 'max_dist'.
    """
    return name.strip().lstrip('-').replace('-', '_')


def read_config_file(path: Union[str, Path]) -> Dict[str, str]:
    """
    Parse a plain-text config file of key=value lines.

    The dotenv syntax applies: '#' comments, optional quotes and an
    'export' prefix. Keys use flag names; values are returned as strings
    and validated by the caller.

    Raises:
        ConfigFileError: on an unparseable line or a key without a value
        OSError: when the file cannot be read
    """
    values = {}
    with open(path, encoding='utf-8') as stream:
        for binding in parse_stream(stream):
            lineno = binding.original.line
            if binding.error:
                raise ConfigFileError(
                    f"{path}:{lineno}: expected key=value, got {binding.original.string.strip()!r}"
                )
            if binding.key is None:
                continue
            if binding.value is None:
                raise ConfigFileError(f"{path}:{lineno}: no value for {binding.key!r}")
            key = normalize_option_name(binding.key)
            if not key:
                raise ConfigFileError(f"{path}:{lineno}: empty key")
            values[key] = binding.value.strip()
    logger.debug(f"Read {len(values)} options from {path}")
    return values


def atomic_write(path: Union[str, Path], data: Union[bytes, str]) -> Path:
    """
    Write data to path through a temporary file and an atomic rename.

    Readers never observe a partially written file. Parent directories
    are created as needed.
    """
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    if isinstance(data, str):
        data = data.encode('utf-8')

    fd, tmp_name = tempfile.mkstemp(prefix=f'.{target.name}.', dir=target.parent)
    try:
        with os.fdopen(fd, 'wb') as handle:
            handle.write(data)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp_name, target)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise

    logger.debug(f"Wrote {len(data)} bytes to {target}")
    return target
