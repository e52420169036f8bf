"""Output interfaces.

Functions
---------

- dump_model
- save_cxt
- save_dot
- save_report
- write_cxt
- write_dot
- write_report

Variables
---------

- REPORT_FORMAT

"""
import json
from pathlib import Path
from typing import Any, Dict, List, Union

from .analysis import QueryResult, RedundancyReport
from .context import FormalContext
from .errors import InputError
from .inputs import FORMAT_VERSION
from .lattice import ConceptLattice
from .model import ModelDocument

__all__ = [
    "dump_model",
    "save_cxt",
    "save_dot",
    "save_report",
    "write_cxt",
    "write_dot",
    "write_report",
    "REPORT_FORMAT",
]

REPORT_FORMAT = "cps-lattice-report/1"


def dump_model(document: ModelDocument) -> bytes:
    """Serialize a model document to JSON.

    Keys follow a fixed order, so the output is stable and parses back
    to an equal document.

    See Also
    --------
    :func:`cpslattice.parse_model` : Parse a model document.

    """
    model = document.model
    components = []
    for component in model.components:
        item: Dict[str, Any] = {
            "id": component.id,
            "layer": component.layer,
        }
        if component.physical_kind is not None:
            item["physical_kind"] = component.physical_kind
        item["inputs"] = list(component.inputs)
        item["outputs"] = list(component.outputs)
        item["functions"] = list(component.offered_functions)
        components.append(item)
    data: Dict[str, Any] = {
        "format": FORMAT_VERSION,
        "components": components,
        "atomics": [
            {"id": atomic.id, "components": list(atomic.components)}
            for atomic in model.atomics
        ],
        "composites": [
            {
                "id": composite.id,
                "logical_members": list(composite.logical_members),
                "physical_parts": list(composite.physical_parts),
                "own_components": list(composite.own_components),
            }
            for composite in model.composites
        ],
        "links": {
            "physical": [list(link) for link in model.physical_links],
            "cyber": [list(link) for link in model.cyber_links],
        },
    }
    equivalences = []
    for eq_class in document.equivalence.classes:
        item = {"canonical": eq_class.canonical}
        if eq_class.layer is not None:
            item["layer"] = eq_class.layer
        item["members"] = list(eq_class.members)
        equivalences.append(item)
    data["equivalences"] = equivalences
    if document.query is not None:
        data["query"] = {
            "functions": list(document.query.nodes),
            "edges": [list(edge) for edge in sorted(document.query.edges)],
        }
    return (json.dumps(data, indent=2, ensure_ascii=False) + "\n").encode(
        "utf-8"
    )


def write_cxt(context: FormalContext) -> bytes:
    """Return a context in the Burmeister format.

    Rows use ``X`` for incidence and ``.`` otherwise. Lines end with LF.

    Raises
    ------
    InputError
        If a name contains a line break.

    See Also
    --------
    :func:`cpslattice.read_cxt` : Parse a context in this format.

    """
    for name in context.objects + context.attributes:
        if "\n" in name or "\r" in name:
            raise InputError(f"Name {name!r} contains a line break.")
    lines = ["B", "", str(len(context.objects)), str(len(context.attributes))]
    lines.append("")
    lines.extend(context.objects)
    lines.extend(context.attributes)
    for row in context.incidence:
        lines.append("".join("X" if value else "." for value in row))
    return ("\n".join(lines) + "\n").encode("utf-8")


def save_cxt(path: Union[str, Path], context: FormalContext):
    """Save a context to a Burmeister file."""
    Path(path).write_bytes(write_cxt(context))


def _quote(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _label_set(names) -> str:
    return "{" + ", ".join(sorted(names)) + "}"


def write_dot(lattice: ConceptLattice, labeling: str = "full") -> bytes:
    """Return the Hasse diagram of a lattice in the DOT language.

    Node identifiers are the canonical concept indices. Edges point from
    a concept to its upper covers and the graph is drawn bottom-up, so
    the supremum is on top.

    Parameters
    ----------
    lattice : :class:`cpslattice.ConceptLattice`
        Lattice to export.
    labeling : {'full', 'reduced'}, default: 'full'
        For 'full' labeling, each node shows its extent and its intent.
        For 'reduced' labeling, an attribute is shown only at the
        largest concept holding it and an object only at the smallest
        concept holding it.

    Returns
    -------
    bytes
        UTF-8 DOT document with LF line endings.

    """
    if labeling not in ("full", "reduced"):
        raise ValueError(
            f"`labeling` must be either 'full' or 'reduced', not {labeling}."
        )
    own_attributes: Dict[int, List[str]] = {}
    own_objects: Dict[int, List[str]] = {}
    if labeling == "reduced":
        context = lattice.context
        for attribute in context.attributes:
            idx = lattice.attribute_concept(attribute)
            own_attributes.setdefault(idx, []).append(attribute)
        for obj in context.objects:
            own_objects.setdefault(lattice.object_concept(obj), []).append(obj)

    lines = [
        "digraph lattice {",
        "  rankdir=BT;",
        '  node [shape=box, fontname="Helvetica"];',
    ]
    for idx, concept in enumerate(lattice.concepts):
        if labeling == "full":
            parts = [_label_set(concept.extent), _label_set(concept.intent)]
        else:
            parts = [
                ", ".join(sorted(own_attributes.get(idx, ()))),
                ", ".join(sorted(own_objects.get(idx, ()))),
            ]
        label = "\\n".join(_quote(part) for part in parts)
        lines.append(f'  {idx} [label="{label}"];')
    for child, parent in sorted(lattice.cover_edges):
        lines.append(f"  {child} -> {parent};")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def save_dot(
    path: Union[str, Path], lattice: ConceptLattice, labeling: str = "full"
):
    """Save the Hasse diagram of a lattice to a DOT file."""
    Path(path).write_bytes(write_dot(lattice, labeling))


def _report_data(report) -> Dict[str, Any]:
    if isinstance(report, RedundancyReport):
        return {
            "format": REPORT_FORMAT,
            "kind": "redundancy",
            "layer": report.layer,
            "multiplicity": dict(report.multiplicity),
            "gaps": list(report.gaps),
            "unavailable": list(report.unavailable),
            "duplicate_groups": [list(g) for g in report.duplicate_groups],
        }
    if isinstance(report, QueryResult):
        data: Dict[str, Any] = {
            "format": REPORT_FORMAT,
            "kind": "query",
            "requested": list(report.requested),
            "satisfiable": report.satisfiable,
            "minimal_covers": [sorted(c) for c in report.minimal_covers],
            "concept_combinations": [
                {
                    "concepts": list(combination.concepts),
                    "extent_union": sorted(combination.extent_union),
                }
                for combination in report.concept_combinations
            ],
        }
        if report.structural_matches is not None:
            data["structural_matches"] = list(report.structural_matches)
        return data
    raise TypeError(
        "Expect RedundancyReport or QueryResult, but got "
        f"{type(report)}."
    )


def _format_table(rows: List[List[str]]) -> List[str]:
    widths = [max(len(cell) for cell in column) for column in zip(*rows)]
    return [
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths))
        .rstrip()
        for row in rows
    ]


def _report_text(report) -> List[str]:
    if isinstance(report, RedundancyReport):
        lines = []
        if report.layer is not None:
            lines.append(f"layer: {report.layer}")
        table = [["function", "providers"]] + [
            [function, str(count)]
            for function, count in report.multiplicity.items()
        ]
        lines.extend(_format_table(table))
        lines.append("")
        lines.append("gaps: " + (", ".join(report.gaps) or "-"))
        lines.append(
            "unavailable: " + (", ".join(report.unavailable) or "-")
        )
        groups = [_label_set(group) for group in report.duplicate_groups]
        lines.append("duplicate groups: " + (", ".join(groups) or "-"))
        return lines
    if isinstance(report, QueryResult):
        lines = [
            "requested: " + _label_set(report.requested),
            f"satisfiable: {'yes' if report.satisfiable else 'no'}",
            "minimal covers:",
        ]
        for idx, cover in enumerate(report.minimal_covers):
            line = "  " + _label_set(cover)
            if report.structural_matches is not None:
                verdict = report.structural_matches[idx]
                line += "  structure: " + ("match" if verdict else "no match")
            lines.append(line)
        if report.concept_combinations:
            lines.append("concept combinations:")
            for combination in report.concept_combinations:
                concepts = ", ".join(f"#{idx}" for idx in combination.concepts)
                lines.append(
                    f"  {concepts} -> "
                    + _label_set(combination.extent_union)
                )
        return lines
    raise TypeError(
        "Expect RedundancyReport or QueryResult, but got "
        f"{type(report)}."
    )


def write_report(
    report: Union[RedundancyReport, QueryResult], format: str = "json"
) -> bytes:
    """Return an analysis report as JSON or as a text table.

    Parameters
    ----------
    report : :class:`cpslattice.RedundancyReport` or \
            :class:`cpslattice.QueryResult`
        Report to write.
    format : {'json', 'text'}, default: 'json'
        Output format. JSON output carries a `format` version key and
        keeps a stable key order.

    Returns
    -------
    bytes
        UTF-8 document ending with a newline.

    """
    # pylint: disable=redefined-builtin
    if format == "json":
        text = json.dumps(_report_data(report), indent=2, ensure_ascii=False)
    elif format == "text":
        text = "\n".join(_report_text(report))
    else:
        raise ValueError(
            f"`format` must be either 'json' or 'text', not {format}."
        )
    return (text + "\n").encode("utf-8")


def save_report(
    path: Union[str, Path],
    report: Union[RedundancyReport, QueryResult],
    format: str = "json",
):
    """Save an analysis report to a file."""
    # pylint: disable=redefined-builtin
    Path(path).write_bytes(write_report(report, format))
