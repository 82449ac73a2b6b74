from .decorators import log_io
from .json_utils import load_json_file, repair_json_output

__all__ = ["load_json_file", "log_io", "repair_json_output"]
