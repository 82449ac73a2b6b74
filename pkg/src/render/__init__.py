from .template import render_report, render_text, to_dot

__all__ = ["render_report", "render_text", "to_dot"]
