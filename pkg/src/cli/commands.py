"""Handlers of the ``glat`` subcommands.

Each handler takes the parsed arguments and the resolved configuration and
returns a :class:`CommandResult`; rendering happens in the dispatcher.
"""

import argparse
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional

from src.config import Configuration
from src.errors import GlatError
from src.finlat import (
    FiniteLattice,
    center,
    center_dual_atoms,
    classify,
    decompose,
    dual_frame_check,
    is_primary,
)
from src.germ import (
    analysis_summary,
    divisibility_lattice,
    frozen_table,
    interval_analysis,
    semibeam_decompose,
    validate_germ,
)
from src.latmod import BeamParams, frozen, lattice_ops, snf_profile, strong_interval
from src.render import render_report
from src.schemas import GermFile, LatticeFile
from src.utils.decorators import log_io
from src.verify import run_all, run_suite
from src.ybe import (
    enumerate_with_classes,
    l_algebra_from_cycle_set,
    relations,
    structure_generators,
    structure_germ,
    validate,
)

from .loaders import (
    load_cycle_set,
    load_germ,
    load_germ_table,
    load_lattice,
    load_plattice,
    load_solution,
    load_structure,
    parse_word,
)

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """Output of a handler.

    Attributes:
        title: Heading of the text rendering
        data: JSON-ready payload
        lattice: Lattice drawn by ``--format dot``, if the command produced one
        ok: False turns into exit code 1 without an error message
        text: Prerendered text output replacing the generic rendering
    """

    title: str
    data: Any
    lattice: Optional[FiniteLattice] = None
    ok: bool = True
    text: Optional[str] = None


Handler = Callable[[argparse.Namespace, Configuration], CommandResult]


def input_file(path: Optional[str], config: Configuration) -> str:
    """The file named on the command line, else the configured ``input_path``."""
    source = path or config.input_path
    if not source:
        raise GlatError("no input file given and input_path is not configured")
    return source


# lattice


@log_io
def lattice_classify(args: argparse.Namespace, config: Configuration) -> CommandResult:
    lattice = load_lattice(input_file(args.file, config))
    return CommandResult(
        "classification", classify(lattice).model_dump(by_alias=True), lattice
    )


@log_io
def lattice_center(args: argparse.Namespace, config: Configuration) -> CommandResult:
    lattice = load_lattice(input_file(args.file, config))
    central = center(lattice)
    data = {"center": central, "dualAtoms": center_dual_atoms(lattice, central)}
    return CommandResult("center", data, lattice)


@log_io
def lattice_decompose(args: argparse.Namespace, config: Configuration) -> CommandResult:
    lattice = load_lattice(input_file(args.file, config))
    return CommandResult("decomposition", decompose(lattice).model_dump(), lattice)


@log_io
def lattice_frame(args: argparse.Namespace, config: Configuration) -> CommandResult:
    lattice = load_lattice(input_file(args.file, config))
    unknown = [x for x in args.elements if not 0 <= x < lattice.n]
    if unknown:
        raise GlatError(f"elements {unknown} are not ids of a {lattice.n}-element lattice")
    check = dual_frame_check(lattice, args.elements, max_size=config.max_frame_size)
    data = {"elements": sorted(set(args.elements)), **check.model_dump(by_alias=True)}
    return CommandResult("dual frame", data, lattice)


@log_io
def lattice_primary(args: argparse.Namespace, config: Configuration) -> CommandResult:
    lattice = load_lattice(input_file(args.file, config))
    return CommandResult("primary", {"primary": is_primary(lattice)}, lattice)


# latmod


@log_io
def latmod_profile(args: argparse.Namespace, config: Configuration) -> CommandResult:
    a = load_plattice(input_file(args.file, config))
    data = {"lattice": a.to_dict(), **snf_profile(a).model_dump(by_alias=True)}
    return CommandResult("SNF profile", data)


@log_io
def latmod_interval(args: argparse.Namespace, config: Configuration) -> CommandResult:
    params = BeamParams(p=args.p, delta=args.delta)
    si = strong_interval(params, args.n, config.max_enum)
    data = {
        "params": {"p": params.p, "delta": params.delta, "n": args.n},
        "size": si.lattice.n,
        "classification": classify(si.lattice).model_dump(by_alias=True),
        "primary": is_primary(si.lattice),
        "elements": [a.to_dict() for a in si.elements],
    }
    return CommandResult("strong interval", data, si.lattice)


@log_io
def latmod_frozen(args: argparse.Namespace, config: Configuration) -> CommandResult:
    params = BeamParams(p=args.p, delta=args.delta)
    a = frozen(params, args.n)
    return CommandResult("frozen power", {"lattice": a.to_dict(), "deg": a.deg})


@log_io
def latmod_ops(args: argparse.Namespace, config: Configuration) -> CommandResult:
    ops = lattice_ops(load_plattice(args.first), load_plattice(args.second))
    data = {
        "meet": ops.meet.to_dict(),
        "join": ops.join.to_dict(),
        "leq": ops.leq,
        "degMeet": ops.deg_meet,
        "degJoin": ops.deg_join,
    }
    return CommandResult("lattice operations", data)


# germ


@log_io
def germ_validate(args: argparse.Namespace, config: Configuration) -> CommandResult:
    report = validate_germ(load_germ_table(args.germ))
    return CommandResult("germ validation", report.model_dump(), ok=report.valid)


@log_io
def germ_nf(args: argparse.Namespace, config: Configuration) -> CommandResult:
    germ = load_germ(args.germ)
    word = [x for x in args.word if x != germ.e]
    nf = germ.left_normal_form(word) if args.left else germ.right_normal_form(word)
    return CommandResult("normal form", list(nf))


@log_io
def germ_arrow(args: argparse.Namespace, config: Configuration) -> CommandResult:
    germ = load_germ(args.germ)
    g, h = parse_word(args.g), parse_word(args.h)
    data = {
        "arrow": list(germ.arrow(g, h)),
        "meet": list(germ.meet(g, h)),
        "join": list(germ.join(g, h)),
        "leq": germ.leq(g, h),
    }
    return CommandResult("arrow", data)


@log_io
def germ_interval(args: argparse.Namespace, config: Configuration) -> CommandResult:
    germ = load_germ(args.germ)
    analysis = interval_analysis(germ)
    return CommandResult(
        "interval analysis",
        analysis_summary(analysis, germ),
        analysis.lattice,
        ok=analysis.duality_ok,
    )


@log_io
def germ_frozen(args: argparse.Namespace, config: Configuration) -> CommandResult:
    germ = load_germ(args.germ)
    table = frozen_table(germ, args.n)
    return CommandResult(f"frozen powers n={args.n}", {z: list(w) for z, w in table.items()})


@log_io
def germ_decompose(args: argparse.Namespace, config: Configuration) -> CommandResult:
    germ = load_germ(args.germ)
    dec = semibeam_decompose(germ, [x for x in args.word if x != germ.e])
    return CommandResult("semibeam decomposition", dec.model_dump(), ok=dec.meet_ok)


# ybe


@log_io
def ybe_validate(args: argparse.Namespace, config: Configuration) -> CommandResult:
    r = load_solution(input_file(args.file, config))
    report = validate(r)
    data = {**report.model_dump(), "valid": report.valid}
    return CommandResult("solution validation", data, ok=report.valid)


@log_io
def ybe_enumerate(args: argparse.Namespace, config: Configuration) -> CommandResult:
    enumeration = enumerate_with_classes(args.n)
    return CommandResult(f"solutions on {args.n} points", enumeration.to_dict())


@log_io
def ybe_germ(args: argparse.Namespace, config: Configuration) -> CommandResult:
    c = load_cycle_set(input_file(args.file, config))
    table = structure_germ(c, max_n=config.max_structure_n)
    labels = structure_generators(c.n)
    data = {
        "relations": relations(c, labels),
        "germ": table.to_dict(),
        "lAlgebra": l_algebra_from_cycle_set(c).to_dict(),
    }
    return CommandResult("structure germ", data, divisibility_lattice(table))


# verify


@log_io
def verify(args: argparse.Namespace, config: Configuration) -> CommandResult:
    params = dict(args.params or [])
    if args.suite == "all":
        reports = run_all(config, params)
    else:
        reports = [run_suite(args.suite, config, params)]
    return CommandResult(
        "verification",
        [r.model_dump() for r in reports],
        ok=all(r.passed for r in reports),
        text="\n".join(render_report(r) for r in reports),
    )


# export


@log_io
def export_dot(args: argparse.Namespace, config: Configuration) -> CommandResult:
    structure = load_structure(input_file(args.file, config))
    lattice = (
        structure
        if isinstance(structure, FiniteLattice)
        else divisibility_lattice(structure)
    )
    return CommandResult("lattice", LatticeFile.from_lattice(lattice).model_dump(), lattice)


@log_io
def export_json(args: argparse.Namespace, config: Configuration) -> CommandResult:
    structure = load_structure(input_file(args.file, config))
    if isinstance(structure, FiniteLattice):
        data: Dict[str, Any] = LatticeFile.from_lattice(structure).model_dump(
            exclude_none=True
        )
    else:
        data = GermFile.from_table(structure).model_dump()
    return CommandResult("structure", data)
