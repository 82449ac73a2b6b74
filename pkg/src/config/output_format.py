from enum import Enum


class OutputFormat(Enum):
    """
    Enumeration of the output formats understood by the CLI.

    Attributes:
        JSON: Machine-readable output that re-parses to an equal structure
        TEXT: Human-readable report rendered from the text templates
        DOT: Graphviz Hasse diagram (only for commands producing a lattice)

    Example:
        >>> fmt = OutputFormat.from_string("JSON")
        >>> fmt.value
        'json'
    """

    JSON = "json"
    TEXT = "text"
    DOT = "dot"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_string(cls, format_str: str) -> "OutputFormat":
        """
        Create an OutputFormat from a string value.

        Args:
            format_str (str): Case-insensitive format name

        Returns:
            OutputFormat: Corresponding enum value

        Raises:
            ValueError: If the format string is not recognized
        """
        format_str = format_str.lower().strip()

        for fmt in cls:
            if fmt.value == format_str:
                return fmt

        aliases = {
            "machine": cls.JSON,
            "txt": cls.TEXT,
            "human": cls.TEXT,
            "graphviz": cls.DOT,
            "gv": cls.DOT,
        }
        if format_str in aliases:
            return aliases[format_str]

        valid_formats = [fmt.value for fmt in cls]
        raise ValueError(
            f"Unknown output format: '{format_str}'. "
            f"Valid formats are: {', '.join(valid_formats)}"
        )
