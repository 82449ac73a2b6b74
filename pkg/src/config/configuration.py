import logging
import os
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional

from src.config.output_format import OutputFormat
from src.errors import ConfigError

logger = logging.getLogger(__name__)

ENV_PREFIX = "GLAT_"

# Guards that must stay strictly positive
_POSITIVE_FIELDS = (
    "max_enum",
    "max_degree",
    "max_structure_n",
    "max_frame_size",
    "random_cases",
)


@dataclass(kw_only=True)
class Configuration:
    """Runtime configuration for enumerations, suites and CLI output.

    Values are resolved from four layers, later layers winning: the defaults
    below, an optional YAML file, ``GLAT_<FIELD>`` environment variables and
    explicit overrides (CLI flags).

    Attributes:
        max_enum: Upper bound on the number of elements any enumeration may produce
        max_degree: Default degree bound for germ and cone enumerations
        max_structure_n: Largest cycle set accepted by the structure germ builder
        max_frame_size: Largest family accepted by the dual frame subset check
        seed: Seed for every randomized suite
        random_cases: Default number of random cases per randomized suite
        output_format: Output format of the CLI
        input_path: Optional default input file
        output_path: Optional file receiving the CLI output instead of stdout
    """

    max_enum: int = 200_000
    max_degree: int = 6
    max_structure_n: int = 6
    max_frame_size: int = 12
    seed: int = 0
    random_cases: int = 1000
    output_format: OutputFormat = OutputFormat.TEXT
    input_path: Optional[str] = None
    output_path: Optional[str] = None

    def __post_init__(self) -> None:
        for name in _POSITIVE_FIELDS:
            value = getattr(self, name)
            if not isinstance(value, int) or value <= 0:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if not isinstance(self.output_format, OutputFormat):
            self.output_format = _coerce("output_format", self.output_format)

    @classmethod
    def from_sources(
        cls,
        file_config: Optional[Dict[str, Any]] = None,
        overrides: Optional[Dict[str, Any]] = None,
    ) -> "Configuration":
        """Create a Configuration from a file mapping, the environment and overrides.

        Args:
            file_config: Mapping loaded from the YAML file; unknown keys are rejected.
            overrides: Explicit values (for example parsed CLI flags); None entries
                are ignored so unset flags do not mask lower layers.

        Returns:
            Configuration: The resolved configuration.

        Raises:
            ConfigError: On unknown keys or values that cannot be coerced.
        """
        known = {f.name for f in fields(cls) if f.init}
        file_config = file_config or {}
        unknown = sorted(set(file_config) - known)
        if unknown:
            raise ConfigError(f"unknown configuration keys: {', '.join(unknown)}")

        values: Dict[str, Any] = {}
        for field_info in fields(cls):
            if not field_info.init:
                continue
            name = field_info.name
            if name in file_config and file_config[name] is not None:
                values[name] = _coerce(name, file_config[name])

            env_value = os.environ.get(f"{ENV_PREFIX}{name.upper()}")
            if env_value is not None:
                logger.debug(f"Configuration {name} taken from environment")
                values[name] = _coerce(name, env_value)

            if overrides and overrides.get(name) is not None:
                values[name] = _coerce(name, overrides[name])

        return cls(**values)

    def with_overrides(self, params: Optional[Dict[str, Any]] = None) -> "Configuration":
        """A copy with ``params`` applied on top; keys must name fields.

        Raises:
            ConfigError: On unknown keys or values that cannot be coerced.
        """
        if not params:
            return self
        known = {f.name for f in fields(self) if f.init}
        unknown = sorted(set(params) - known)
        if unknown:
            raise ConfigError(f"unknown suite parameters: {', '.join(unknown)}")
        return replace(self, **{k: _coerce(k, v) for k, v in params.items()})


def _coerce(name: str, value: Any) -> Any:
    if name == "output_format":
        if isinstance(value, OutputFormat):
            return value
        try:
            return OutputFormat.from_string(str(value))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    if name in ("input_path", "output_path"):
        return str(value)
    try:
        return int(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{name} must be an integer, got {value!r}") from exc
