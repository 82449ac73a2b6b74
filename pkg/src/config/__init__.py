from dotenv import load_dotenv

from .configuration import ENV_PREFIX, Configuration
from .load_config import load_yaml_config
from .output_format import OutputFormat

# Load environment variables
load_dotenv()

__all__ = [
    "ENV_PREFIX",
    "Configuration",
    "OutputFormat",
    "load_yaml_config",
]
