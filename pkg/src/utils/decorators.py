import functools
import logging
from typing import Any, Callable, TypeVar

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])


def _short(value: Any, limit: int) -> str:
    text = str(value)
    return text if len(text) <= limit else text[: limit - 3] + "..."


def log_io(func: F) -> F:
    """
    A decorator that logs the parameters and result of a public operation.

    Parameters and results are truncated so that large tables or reports do not
    flood the log. Exceptions are logged and re-raised unchanged.

    Args:
        func (Callable[..., Any]): The operation to be decorated

    Returns:
        Callable[..., Any]: The wrapped operation
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        function_name = func.__name__
        try:
            args_str = ", ".join(_short(arg, 100) for arg in args)
            kwargs_str = ", ".join(f"{k}={_short(v, 100)}" for k, v in kwargs.items())
            params = ", ".join(filter(None, [args_str, kwargs_str]))
            logger.debug(f"{function_name} called with parameters: {params}")
        except Exception as e:
            logger.warning(f"{function_name} called (parameter logging failed: {e})")

        try:
            result = func(*args, **kwargs)
        except Exception as e:
            logger.error(f"{function_name} failed with error: {e}")
            raise

        try:
            logger.debug(f"{function_name} returned: {_short(result, 200)}")
        except Exception as e:
            logger.debug(f"{function_name} completed (result logging failed: {e})")
        return result

    return wrapper  # type: ignore[return-value]
