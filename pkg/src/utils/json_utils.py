import json
import logging
import re
from pathlib import Path
from typing import Any, Union

import json_repair

from src.errors import GlatError

logger = logging.getLogger(__name__)

# Opening fence with an optional language tag, and the closing fence
_FENCE = re.compile(r"^```[a-zA-Z]*\s*|\s*```$")


def repair_json_output(content: str) -> str:
    """
    Normalize a hand-edited structure file to compact JSON.

    Tables of germs and solutions are often pasted from notebooks, so the text may
    sit inside a code fence or use single quotes and trailing commas.

    Args:
        content (str): Raw file content

    Returns:
        str: Compact JSON when the content looks like a JSON document and
            json_repair can read it, otherwise the stripped content unchanged
    """
    if not content:
        logger.warning("Empty content provided to repair_json_output")
        return ""

    text = content.strip()
    if not (text.startswith(("{", "[")) or text.startswith("```")):
        return text

    body = _FENCE.sub("", text)
    try:
        value = json_repair.loads(body)
    except ValueError as e:
        logger.warning(f"JSON repair failed: {e}")
        return text
    return json.dumps(value, ensure_ascii=False, separators=(",", ":"))


def load_json_file(path: Union[str, Path]) -> Any:
    """
    Read a structure file leniently and return the decoded JSON value.

    Raises:
        GlatError: If the file is missing or still not valid JSON after repair
    """
    file_path = Path(path)
    if not file_path.is_file():
        raise GlatError(f"input file {file_path} does not exist")

    raw = file_path.read_text(encoding="utf-8")
    try:
        return json.loads(raw)
    except json.JSONDecodeError:
        logger.info(f"{file_path} is not strict JSON, attempting repair")

    try:
        return json.loads(repair_json_output(raw))
    except json.JSONDecodeError as e:
        raise GlatError(f"{file_path} is not valid JSON: {e}") from e
