import logging
import os
from pathlib import Path
from typing import Any, Dict

import yaml

from src.errors import ConfigError

logger = logging.getLogger(__name__)

# Parsed configuration files keyed by resolved path
_loaded: Dict[Path, Dict[str, Any]] = {}


def expand_env(value: Any) -> Any:
    """
    Substitute ``$NAME`` string values with the environment variable ``NAME``.

    Nested mappings and lists are expanded recursively. An unset variable expands
    to its bare name, so ``output_path: $GLAT_OUT`` still yields a usable path.

    Args:
        value (Any): A value loaded from YAML

    Returns:
        Any: The value with every ``$NAME`` string replaced
    """
    if isinstance(value, dict):
        return {key: expand_env(item) for key, item in value.items()}
    if isinstance(value, list):
        return [expand_env(item) for item in value]
    if isinstance(value, str) and value.startswith("$"):
        name = value[1:]
        return os.environ.get(name, name)
    return value


def load_yaml_config(file_path: str) -> Dict[str, Any]:
    """
    Read the optional glat YAML file.

    A blank path or a missing file gives an empty mapping, leaving the defaults
    and ``GLAT_*`` variables in charge. Files are parsed once per process.

    Args:
        file_path (str): Path given with ``--config``

    Returns:
        Dict[str, Any]: Top-level mapping with environment references expanded

    Raises:
        ConfigError: If the file is not valid YAML or is not a mapping
    """
    if not file_path or not file_path.strip():
        return {}

    path = Path(file_path).expanduser().resolve()
    if path in _loaded:
        return _loaded[path]
    if not path.is_file():
        logger.warning(f"Configuration file {path} not found, using defaults")
        return {}

    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as e:
        logger.error(f"Error parsing YAML file {path}: {e}")
        raise ConfigError(f"cannot parse {path}: {e}") from e
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e}") from e

    raw = raw if raw is not None else {}
    if not isinstance(raw, dict):
        raise ConfigError(f"{path} must contain a mapping at the top level")

    _loaded[path] = expand_env(raw)
    logger.debug(f"Loaded configuration keys {sorted(_loaded[path])} from {path}")
    return _loaded[path]
