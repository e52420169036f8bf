"""Command-line interface.

Functions
---------

- main

"""
import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .analysis import (
    FunctionGraph,
    query_isomorphism_check,
    redundancy_report,
    satisfy_query,
)
from .compile import build_formal_context, function_dependency_graph
from .context import FormalContext
from .errors import CpsLatticeError, InputError
from .inputs import load_cxt, load_model
from .lattice import build_lattice
from .model import ModelDocument, Severity, validate_model
from .outputs import write_cxt, write_dot, write_report
from .utils import DEFAULT_MAX_OBJECTS, MAX_OBJECTS_ENV
from .version import __version__

__all__ = ["main"]

logger = logging.getLogger(__name__)

PROG = "cps-lattice"

EPILOG = (
    "Exit codes: 0 success, 1 findings the invocation asked to fail on "
    "(invalid model, gaps with --fail-on-gaps, unsatisfiable query), "
    "2 input or usage error.\n\n"
    f"Environment: {MAX_OBJECTS_ENV} sets the size guard of the "
    f"exhaustive enumerations (default: {DEFAULT_MAX_OBJECTS})."
)


def _emit(data: bytes, output: Optional[str] = None):
    if output is None:
        sys.stdout.write(data.decode("utf-8"))
    else:
        Path(output).write_bytes(data)
        logger.info("Wrote %s.", output)


def _load(
    path: str, include_inclusive: bool = True
) -> Tuple[FormalContext, Optional[ModelDocument]]:
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        document = load_model(path)
        context = build_formal_context(
            document.model, document.equivalence, include_inclusive
        )
        return context, document
    if suffix == ".cxt":
        context = load_cxt(path)
        if not include_inclusive:
            context = context.project(
                context.attributes_in_layer("physical", "cyber", None)
            )
        return context, None
    raise InputError(
        f"Cannot tell the format of {path!r}; expect a .json model or a "
        ".cxt context."
    )


def _split(text: str) -> List[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _parse_edges(text: str) -> List[Tuple[str, str]]:
    edges = []
    for item in _split(text):
        source, sep, target = item.partition(">")
        if not sep or not source.strip() or not target.strip():
            raise InputError(f"Malformed edge {item!r}; expect 'a>b'.")
        edges.append((source.strip(), target.strip()))
    return edges


def _cmd_validate(args: argparse.Namespace) -> int:
    if Path(args.input).suffix.lower() != ".json":
        raise InputError("`validate` expects a .json model.")
    document = load_model(args.input)
    diagnostics = validate_model(document.model, document.equivalence)
    lines = [str(diagnostic) for diagnostic in diagnostics]
    n_errors = sum(d.severity is Severity.ERROR for d in diagnostics)
    n_warnings = sum(d.severity is Severity.WARNING for d in diagnostics)
    lines.append(f"{n_errors} error(s), {n_warnings} warning(s)")
    _emit(("\n".join(lines) + "\n").encode("utf-8"))
    return 1 if n_errors else 0


def _cmd_context(args: argparse.Namespace) -> int:
    context, _ = _load(args.input, not args.no_inclusive)
    _emit(write_cxt(context), args.output)
    return 0


def _layer_view(context: FormalContext, layer: str) -> FormalContext:
    if layer == "all":
        return context
    return context.project(context.attributes_in_layer(layer))


def _cmd_lattice(args: argparse.Namespace) -> int:
    context, _ = _load(args.input, not args.no_inclusive)
    lattice = build_lattice(_layer_view(context, args.layer))
    lines = [f"{idx}: {concept}" for idx, concept in enumerate(lattice)]
    _emit(("\n".join(lines) + "\n").encode("utf-8"), args.output)
    if args.dot is not None:
        Path(args.dot).write_bytes(write_dot(lattice, args.labels))
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    context, _ = _load(args.input)
    layer = None if args.layer == "all" else args.layer
    report = redundancy_report(context, layer, args.include_inclusive)
    _emit(write_report(report, args.format), args.output)
    if args.fail_on_gaps and report.gaps:
        return 1
    return 0


def _cmd_query(args: argparse.Namespace) -> int:
    context, document = _load(args.input, args.include_inclusive)
    query = document.query if document is not None else None
    if args.functions is not None:
        functions = _split(args.functions)
        edges = _parse_edges(args.edges) if args.edges else []
        query = FunctionGraph(nodes=tuple(functions), edges=frozenset(edges))
    elif args.edges:
        raise InputError("`--edges` needs `--functions`.")
    if query is None:
        raise InputError(
            "No functions requested; use `--functions` or a model with a "
            "query."
        )

    lattice = build_lattice(context) if args.concepts else None
    result = satisfy_query(context, set(query.nodes), lattice)
    if query.edges:
        if document is None:
            raise InputError(
                "Checking dependency edges needs a .json model with links."
            )
        matches = []
        for cover in result.minimal_covers:
            candidate = function_dependency_graph(
                document.model, document.equivalence, cover, query.nodes
            )
            matches.append(bool(query_isomorphism_check(candidate, query)))
        result = replace(result, structural_matches=tuple(matches))
    _emit(write_report(result, args.format), args.output)
    return 0 if result.satisfiable else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description=(
            "Model cyber-physical systems, compile them into formal "
            "contexts and analyze their redundancy and resiliency."
        ),
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "--version", action="version", version=f"{PROG} {__version__}"
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument(
        "-v", "--verbose", action="store_true", help="log debug messages"
    )
    verbosity.add_argument(
        "-q", "--quiet", action="store_true", help="log errors only"
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    validate = subparsers.add_parser(
        "validate", help="check a model against the meta-model"
    )
    validate.add_argument("input", help="model file (.json)")
    validate.set_defaults(func=_cmd_validate)

    context = subparsers.add_parser(
        "context", help="compile a model into a formal context (.cxt)"
    )
    context.add_argument("input", help="model file (.json)")
    context.add_argument(
        "--no-inclusive",
        action="store_true",
        help="leave out the inclusive (part-of) attributes",
    )
    context.add_argument("-o", "--output", help="write to a file")
    context.set_defaults(func=_cmd_context)

    lattice = subparsers.add_parser(
        "lattice", help="list the formal concepts of a context"
    )
    lattice.add_argument("input", help="model (.json) or context (.cxt)")
    lattice.add_argument(
        "--layer",
        choices=("all", "physical", "cyber"),
        default="all",
        help="restrict to the functions of one layer, without the "
        "inclusive attributes (default: all)",
    )
    lattice.add_argument(
        "--no-inclusive",
        action="store_true",
        help="leave out the inclusive (part-of) attributes",
    )
    lattice.add_argument("--dot", help="write the Hasse diagram to a file")
    lattice.add_argument(
        "--labels",
        choices=("full", "reduced"),
        default="full",
        help="node labels of the Hasse diagram (default: full)",
    )
    lattice.add_argument("-o", "--output", help="write to a file")
    lattice.set_defaults(func=_cmd_lattice)

    analyze = subparsers.add_parser(
        "analyze", help="report redundancy and resiliency gaps"
    )
    analyze.add_argument("input", help="model (.json) or context (.cxt)")
    analyze.add_argument(
        "--layer",
        choices=("all", "physical", "cyber"),
        default="all",
        help="restrict to the functions of one layer (default: all)",
    )
    analyze.add_argument(
        "--include-inclusive",
        action="store_true",
        help="count the inclusive (part-of) attributes as functions",
    )
    analyze.add_argument(
        "--fail-on-gaps",
        action="store_true",
        help="exit with 1 if a function has at most one provider",
    )
    analyze.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="report format (default: text)",
    )
    analyze.add_argument("-o", "--output", help="write to a file")
    analyze.set_defaults(func=_cmd_analyze)

    query = subparsers.add_parser(
        "query", help="find the minimal subsystem sets offering functions"
    )
    query.add_argument("input", help="model (.json) or context (.cxt)")
    query.add_argument(
        "--functions",
        help="comma-separated requested functions (default: the query of "
        "the model)",
    )
    query.add_argument(
        "--edges",
        help="comma-separated dependency edges 'a>b' to check against "
        "each cover",
    )
    query.add_argument(
        "--concepts",
        action="store_true",
        help="also list the covering concept combinations",
    )
    query.add_argument(
        "--include-inclusive",
        action="store_true",
        help="keep the inclusive (part-of) attributes in the context",
    )
    query.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="report format (default: text)",
    )
    query.add_argument("-o", "--output", help="write to a file")
    query.set_defaults(func=_cmd_query)
    return parser


def main(argv: Sequence[str] = None) -> int:
    """Run the command-line interface and return the exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(levelname)s: %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (CpsLatticeError, OSError) as err:
        print(f"{PROG}: error: {err}", file=sys.stderr)
        return 2
