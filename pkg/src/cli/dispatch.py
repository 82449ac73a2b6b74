import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.config import Configuration, OutputFormat, load_yaml_config
from src.errors import GlatError
from src.render import render_text, to_dot
from src.utils.decorators import log_io
from src.verify import suite_names

from . import commands
from .commands import CommandResult

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def enable_debug_logging() -> None:
    """Set the ``src`` package to DEBUG so enumerations report their progress."""
    logging.getLogger("src").setLevel(logging.DEBUG)


def setup_logging(debug: bool = False) -> None:
    """Log to stderr so that stdout carries only command output."""
    logging.basicConfig(level=logging.INFO, format=LOG_FORMAT, stream=sys.stderr)
    if debug:
        enable_debug_logging()


def _key_value(text: str) -> Tuple[str, str]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected KEY=VALUE, got {text!r}")
    return key.strip(), value.strip()


def _add(subparsers, name: str, handler, help_text: str) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(name, help=help_text)
    parser.set_defaults(handler=handler)
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glat",
        description="Exact computations in modular noetherian right l-groups",
    )
    parser.add_argument("--json", action="store_true", help="Machine-readable output")
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        help="Output format (default: text, or the configured one)",
    )
    parser.add_argument("--config", help="Optional YAML configuration file")
    parser.add_argument("--output", dest="output_path", help="Write output to a file")
    parser.add_argument("--seed", type=int, help="Seed of randomized suites")
    parser.add_argument("--max-enum", dest="max_enum", type=int, help="Enumeration guard")
    parser.add_argument(
        "--max-frame-size", dest="max_frame_size", type=int, help="Dual frame size guard"
    )
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    groups = parser.add_subparsers(dest="command", required=True)

    lattice = groups.add_parser("lattice", help="Finite lattices").add_subparsers(
        dest="action", required=True
    )
    for name, handler, help_text in (
        ("classify", commands.lattice_classify, "Modularity, distributivity, geometry"),
        ("center", commands.lattice_center, "Center and its dual atoms"),
        ("decompose", commands.lattice_decompose, "Direct decomposition along the center"),
        ("primary", commands.lattice_primary, "Primary lattice test"),
    ):
        _add(lattice, name, handler, help_text).add_argument("file", nargs="?")
    frame = _add(lattice, "frame", commands.lattice_frame, "Dual frame check of a family")
    frame.add_argument("file", nargs="?")
    frame.add_argument("--elements", type=int, nargs="+", required=True, metavar="ID")

    latmod = groups.add_parser("latmod", help="Lattices of R-submodules").add_subparsers(
        dest="action", required=True
    )
    _add(latmod, "profile", commands.latmod_profile, "SNF profile of an R-lattice").add_argument(
        "file", nargs="?"
    )
    for name, handler, help_text in (
        ("interval", commands.latmod_interval, "The strong interval [p^n R^delta, R^delta]"),
        ("frozen", commands.latmod_frozen, "The frozen power p^n R^delta"),
    ):
        sub = _add(latmod, name, handler, help_text)
        sub.add_argument("--p", type=int, required=True)
        sub.add_argument("--delta", type=int, required=True)
        sub.add_argument("--n", type=int, default=1)
    ops = _add(latmod, "ops", commands.latmod_ops, "Meet, join and order of two R-lattices")
    ops.add_argument("first")
    ops.add_argument("second")

    germ = groups.add_parser("germ", help="Germs and their cones").add_subparsers(
        dest="action", required=True
    )
    germ_help = "Germ file or built-in germ name"
    _add(germ, "validate", commands.germ_validate, "Check the germ axioms").add_argument(
        "germ", help=germ_help
    )
    nf = _add(germ, "nf", commands.germ_nf, "Normal form of a word")
    nf.add_argument("germ", help=germ_help)
    nf.add_argument("word", nargs="*", help="Germ elements in product order")
    nf.add_argument("--left", action="store_true", help="Left instead of right normal form")
    arrow = _add(germ, "arrow", commands.germ_arrow, "g → h, meet, join and order")
    arrow.add_argument("germ", help=germ_help)
    arrow.add_argument("g", help="Comma-separated word")
    arrow.add_argument("h", help="Comma-separated word")
    _add(germ, "interval", commands.germ_interval, "Center, U/L/M and D").add_argument(
        "germ", help=germ_help
    )
    frozen = _add(germ, "frozen", commands.germ_frozen, "Frozen powers of the generators")
    frozen.add_argument("germ", help=germ_help)
    frozen.add_argument("--n", type=int, default=2)
    dec = _add(germ, "decompose", commands.germ_decompose, "Semibeam decomposition")
    dec.add_argument("germ", help=germ_help)
    dec.add_argument("word", nargs="*")

    ybe = groups.add_parser("ybe", help="Yang-Baxter solutions").add_subparsers(
        dest="action", required=True
    )
    _add(ybe, "validate", commands.ybe_validate, "Check a solution").add_argument(
        "file", nargs="?"
    )
    _add(ybe, "enumerate", commands.ybe_enumerate, "All solutions on n points").add_argument(
        "--n", type=int, required=True
    )
    _add(ybe, "germ", commands.ybe_germ, "Structure germ of a solution or cycle set").add_argument(
        "file", nargs="?"
    )

    verify = groups.add_parser("verify", help="Run verification suites")
    verify.set_defaults(handler=commands.verify)
    verify.add_argument(
        "--suite",
        required=True,
        help=f"Suite name or 'all'; known: {', '.join(suite_names())}",
    )
    verify.add_argument("--params", nargs="+", type=_key_value, metavar="KEY=VALUE")

    export = groups.add_parser("export", help="Export a lattice or germ file").add_subparsers(
        dest="action", required=True
    )
    for name, handler, help_text in (
        ("dot", commands.export_dot, "Hasse diagram in dot syntax"),
        ("json", commands.export_json, "Normalized JSON"),
    ):
        _add(export, name, handler, help_text).add_argument("file", nargs="?")
    return parser


@log_io
def resolve_config(args: argparse.Namespace) -> Configuration:
    file_config = load_yaml_config(args.config) if args.config else {}
    output_format = "json" if args.json else args.output_format
    if args.command == "export" and args.action == "dot":
        output_format = "dot"
    overrides: Dict[str, Any] = {
        "seed": args.seed,
        "max_enum": args.max_enum,
        "max_frame_size": args.max_frame_size,
        "output_format": output_format,
        "output_path": args.output_path,
    }
    return Configuration.from_sources(file_config, overrides)


def render(result: CommandResult, config: Configuration) -> str:
    fmt = config.output_format
    if fmt == OutputFormat.JSON:
        return json.dumps(result.data, ensure_ascii=False, indent=2, default=str)
    if fmt == OutputFormat.DOT:
        if result.lattice is None:
            raise GlatError(f"{result.title} does not produce a lattice to draw")
        return to_dot(result.lattice)
    if result.text is not None:
        return result.text
    return render_text(result.title, result.data, result.lattice)


def _emit(text: str, config: Configuration) -> None:
    if config.output_path:
        Path(config.output_path).write_text(text + "\n", encoding="utf-8")
        logger.info(f"Output written to {config.output_path}")
    else:
        print(text)


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command.

    Returns:
        int: 0 on success, 1 on a computation error or a failed check, 2 on a
        usage error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code or 0)

    setup_logging(args.debug)
    try:
        config = resolve_config(args)
        result = args.handler(args, config)
        _emit(render(result, config), config)
    except GlatError as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        error = {"error": type(e).__name__, "message": str(e)}
        print(json.dumps(error, ensure_ascii=False), file=sys.stderr)
        return 1
    return 0 if result.ok else 1


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(dispatch(argv))
