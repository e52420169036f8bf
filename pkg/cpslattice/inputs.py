"""Input interfaces.

Functions
---------

- load_cxt
- load_model
- parse_model
- read_cxt

Variables
---------

- FORMAT_VERSION
- MODEL_SCHEMA

"""
import json
from pathlib import Path
from typing import Any, Dict, List, Union

from jsonschema import Draft7Validator
from jsonschema.exceptions import best_match

from .analysis import FunctionGraph
from .context import FormalContext
from .errors import InputError
from .model import (
    AtomicCps,
    Component,
    CompositeCps,
    CpsModel,
    EquivalenceClass,
    FunctionEquivalence,
    ModelDocument,
)

__all__ = [
    "load_cxt",
    "load_model",
    "parse_model",
    "read_cxt",
    "FORMAT_VERSION",
    "MODEL_SCHEMA",
]

FORMAT_VERSION = "cps-lattice/1"

_STRINGS = {"type": "array", "items": {"type": "string"}}
_PAIRS = {
    "type": "array",
    "items": {
        "type": "array",
        "items": {"type": "string"},
        "minItems": 2,
        "maxItems": 2,
    },
}

MODEL_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "additionalProperties": False,
    "required": ["format", "components", "atomics"],
    "properties": {
        "format": {"const": FORMAT_VERSION},
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id", "layer", "inputs", "outputs", "functions"],
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "layer": {"type": "string"},
                    "physical_kind": {"type": ["string", "null"]},
                    "inputs": _STRINGS,
                    "outputs": _STRINGS,
                    "functions": _STRINGS,
                },
            },
        },
        "atomics": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id", "components"],
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "components": _STRINGS,
                },
            },
        },
        "composites": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id"],
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "logical_members": _STRINGS,
                    "physical_parts": _STRINGS,
                    "own_components": _STRINGS,
                },
            },
        },
        "links": {
            "type": "object",
            "additionalProperties": False,
            "properties": {"physical": _PAIRS, "cyber": _PAIRS},
        },
        "equivalences": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["canonical", "members"],
                "properties": {
                    "canonical": {"type": "string", "minLength": 1},
                    "members": _STRINGS,
                    "layer": {"type": ["string", "null"]},
                },
            },
        },
        "query": {
            "type": "object",
            "additionalProperties": False,
            "required": ["functions"],
            "properties": {"functions": _STRINGS, "edges": _PAIRS},
        },
    },
}

_VALIDATOR = Draft7Validator(MODEL_SCHEMA)


def _decode(data: Union[bytes, str]) -> str:
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as err:
        raise InputError(f"Document is not valid UTF-8: {err}.") from None


def _pointer(path) -> str:
    return "".join(
        "/" + str(part).replace("~", "~0").replace("/", "~1")
        for part in path
    )


def parse_model(data: Union[bytes, str]) -> ModelDocument:
    """Parse a model document.

    The document is JSON with the keys `format` (``cps-lattice/1``),
    `components`, `atomics`, and optionally `composites`, `links`,
    `equivalences` and `query`. Structural problems are reported here;
    meta-model violations are left to :func:`cpslattice.validate_model`.

    Parameters
    ----------
    data : bytes or str
        UTF-8 document.

    Returns
    -------
    :class:`cpslattice.ModelDocument`
        Parsed model, equivalences and optional query.

    Raises
    ------
    InputError
        On a syntax error (with `line` and `column`) or a schema
        violation (with a JSON-pointer `path`, empty for the root).

    See Also
    --------
    :func:`cpslattice.dump_model` : Serialize a model document.

    """
    text = _decode(data)
    if not text.strip():
        raise InputError("Schema violation at /: document is empty.", path="")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(
            f"Syntax error at line {err.lineno}, column {err.colno}: "
            f"{err.msg}.",
            line=err.lineno,
            column=err.colno,
        ) from None
    error = best_match(_VALIDATOR.iter_errors(document))
    if error is not None:
        path = _pointer(error.absolute_path)
        raise InputError(
            f"Schema violation at {path or '/'}: {error.message}", path=path
        )

    components = tuple(
        Component(
            id=item["id"],
            layer=item["layer"],
            inputs=tuple(item["inputs"]),
            outputs=tuple(item["outputs"]),
            offered_functions=tuple(item["functions"]),
            physical_kind=item.get("physical_kind"),
        )
        for item in document["components"]
    )
    atomics = tuple(
        AtomicCps(id=item["id"], components=tuple(item["components"]))
        for item in document["atomics"]
    )
    composites = tuple(
        CompositeCps(
            id=item["id"],
            logical_members=tuple(item.get("logical_members", ())),
            physical_parts=tuple(item.get("physical_parts", ())),
            own_components=tuple(item.get("own_components", ())),
        )
        for item in document.get("composites", ())
    )
    links = document.get("links", {})
    model = CpsModel(
        components=components,
        atomics=atomics,
        composites=composites,
        physical_links=tuple(
            tuple(link) for link in links.get("physical", ())
        ),
        cyber_links=tuple(tuple(link) for link in links.get("cyber", ())),
    )
    equivalence = FunctionEquivalence(
        tuple(
            EquivalenceClass(
                canonical=item["canonical"],
                members=tuple(item["members"]),
                layer=item.get("layer"),
            )
            for item in document.get("equivalences", ())
        )
    )
    query = None
    if "query" in document:
        query = FunctionGraph(
            nodes=tuple(document["query"]["functions"]),
            edges=frozenset(
                tuple(edge) for edge in document["query"].get("edges", ())
            ),
        )
    return ModelDocument(model=model, equivalence=equivalence, query=query)


def load_model(path: Union[str, Path]) -> ModelDocument:
    """Load a model document from a JSON file.

    See Also
    --------
    :func:`cpslattice.parse_model` : Parse a model document.

    """
    return parse_model(Path(path).read_bytes())


def read_cxt(data: Union[bytes, str]) -> FormalContext:
    """Parse a context in the Burmeister format.

    The format is a line ``B``, a name line (usually blank), the object
    count, the attribute count, a blank line, the object names, the
    attribute names, then one row of ``.`` and ``X`` per object.

    Parameters
    ----------
    data : bytes or str
        UTF-8 document.

    Returns
    -------
    :class:`cpslattice.FormalContext`
        Parsed context. Layers are inferred from attribute names.

    Raises
    ------
    InputError
        On a malformed header, names or rows, naming the line.

    See Also
    --------
    :func:`cpslattice.write_cxt` : Write a context in this format.

    """
    lines: List[str] = [
        line[:-1] if line.endswith("\r") else line
        for line in _decode(data).split("\n")
    ]
    if not lines or lines[0].strip() != "B":
        raise InputError("line 1: expected the header 'B'.", line=1)
    if len(lines) < 4:
        raise InputError("Truncated header.", line=len(lines))
    counts = []
    for pos in (2, 3):
        try:
            value = int(lines[pos].strip())
        except ValueError:
            value = -1
        if value < 0:
            raise InputError(
                f"line {pos + 1}: expected a count, got {lines[pos]!r}.",
                line=pos + 1,
            )
        counts.append(value)
    n_objects, n_attributes = counts

    pos = 4
    while pos < len(lines) and not lines[pos].strip():
        pos += 1
    names = lines[pos : pos + n_objects + n_attributes]
    if len(names) < n_objects + n_attributes:
        raise InputError(
            f"Expected {n_objects} object and {n_attributes} attribute "
            "names.",
            line=len(lines),
        )
    objects = names[:n_objects]
    attributes = names[n_objects:]
    pos += n_objects + n_attributes

    rows = []
    for idx, obj in enumerate(objects):
        line_number = pos + idx + 1
        if pos + idx >= len(lines):
            raise InputError(f"Missing row for object {obj!r}.")
        row = lines[pos + idx].rstrip()
        if len(row) != n_attributes:
            raise InputError(
                f"line {line_number}: row for object {obj!r} has length "
                f"{len(row)}, expected {n_attributes}.",
                line=line_number,
            )
        invalid = set(row) - {".", "X"}
        if invalid:
            raise InputError(
                f"line {line_number}: row for object {obj!r} contains "
                f"{sorted(invalid)}; only '.' and 'X' are allowed.",
                line=line_number,
            )
        rows.append([char == "X" for char in row])
    pos += n_objects
    for rest in range(pos, len(lines)):
        if lines[rest].strip():
            raise InputError(
                f"line {rest + 1}: unexpected content after the rows.",
                line=rest + 1,
            )
    try:
        return FormalContext(
            objects=objects, attributes=attributes, incidence=rows
        )
    except ValueError as err:
        raise InputError(str(err)) from None


def load_cxt(path: Union[str, Path]) -> FormalContext:
    """Load a context from a Burmeister file.

    See Also
    --------
    :func:`cpslattice.read_cxt` : Parse a context in this format.

    """
    return read_cxt(Path(path).read_bytes())
