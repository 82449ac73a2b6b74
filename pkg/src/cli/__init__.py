from .dispatch import build_parser, dispatch, main

__all__ = ["build_parser", "dispatch", "main"]
