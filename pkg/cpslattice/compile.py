"""Compilation of CPS models into formal contexts.

Functions
---------

- atomic_function_profile
- build_formal_context
- canonical_functions
- function_dependency_graph
- inclusive_attributes

Variables
---------

- CORE_SUFFIX
- INCLUSIVE_PREFIX

"""
import logging
from dataclasses import dataclass
from typing import AbstractSet, Dict, FrozenSet, List, Sequence, Tuple

import networkx as nx
import numpy as np

from .analysis import FunctionGraph
from .context import FormalContext
from .errors import InputError, ModelValidationError
from .model import (
    CpsModel,
    FunctionEquivalence,
    Severity,
    _cycle_diagnostics,
    validate_model,
)
from .utils import infer_layer

__all__ = [
    "LayeredProfile",
    "atomic_function_profile",
    "build_formal_context",
    "canonical_functions",
    "function_dependency_graph",
    "inclusive_attributes",
    "CORE_SUFFIX",
    "INCLUSIVE_PREFIX",
]

logger = logging.getLogger(__name__)

CORE_SUFFIX = ".core"
INCLUSIVE_PREFIX = "FI^"


@dataclass(frozen=True)
class LayeredProfile:
    """Canonical functions of a subsystem, split by providing layer."""

    physical: FrozenSet[str]
    cyber: FrozenSet[str]

    @property
    def functions(self) -> FrozenSet[str]:
        """All canonical functions of the subsystem."""
        return self.physical | self.cyber


def _subsystems(model: CpsModel) -> List[Tuple[str, Tuple[str, ...]]]:
    # Atomics in declaration order, then one synthesized atomic per
    # composite owning components.
    subsystems = [(atomic.id, atomic.components) for atomic in model.atomics]
    for composite in model.composites:
        if composite.own_components:
            subsystems.append(
                (composite.id + CORE_SUFFIX, composite.own_components)
            )
    return subsystems


def _require_valid(model: CpsModel, equivalence: FunctionEquivalence = None):
    errors = [
        diagnostic
        for diagnostic in validate_model(model, equivalence)
        if diagnostic.severity is Severity.ERROR
    ]
    if errors:
        raise ModelValidationError(errors)


def atomic_function_profile(
    model: CpsModel, equivalence: FunctionEquivalence
) -> Dict[str, LayeredProfile]:
    """Return the canonical functions of each atomic subsystem.

    Each raw function offered by a component of an atomic CPS is
    replaced by the canonical identifier of its equivalence class.
    Functions without a declared class form singleton classes. A
    composite owning components contributes a synthesized atomic named
    ``<composite-id>.core``.

    Parameters
    ----------
    model : :class:`cpslattice.CpsModel`
        Valid model.
    equivalence : :class:`cpslattice.FunctionEquivalence`
        Declared equivalence classes.

    Returns
    -------
    dict of str to :class:`cpslattice.LayeredProfile`
        Profiles keyed by subsystem identifier, in declaration order.

    """
    canonical = equivalence.completed(model).canonical_map()
    components = model.component_map()
    profiles = {}
    for subsystem, owned in _subsystems(model):
        layers: Dict[str, set] = {"physical": set(), "cyber": set()}
        for component_id in owned:
            component = components[component_id]
            for raw in component.offered_functions:
                if raw not in canonical:
                    raise RuntimeError(
                        f"Function {raw!r} has no equivalence class."
                    )
                layers[component.layer].add(canonical[raw])
        profiles[subsystem] = LayeredProfile(
            frozenset(layers["physical"]), frozenset(layers["cyber"])
        )
    return profiles


def inclusive_attributes(model: CpsModel) -> Dict[str, FrozenSet[str]]:
    """Return the atomic subsystems each composite includes.

    Membership is transitive: a composite includes the atomics of its
    members, of their members and so on, together with the synthesized
    core subsystems of itself and of included composites.

    Raises
    ------
    ModelValidationError
        If the composition hierarchy is cyclic.

    """
    cycles = _cycle_diagnostics(model)
    if cycles:
        raise ModelValidationError(cycles)
    graph = model.composition_graph()
    atomics = {atomic.id for atomic in model.atomics}
    owners = {
        composite.id
        for composite in model.composites
        if composite.own_components
    }
    included = {}
    for composite in model.composites:
        reachable = nx.descendants(graph, composite.id) | {composite.id}
        members = {node for node in reachable if node in atomics}
        members.update(
            node + CORE_SUFFIX for node in reachable if node in owners
        )
        included[composite.id] = frozenset(members)
    return included


def canonical_functions(
    model: CpsModel, equivalence: FunctionEquivalence
) -> List[Tuple[str, str]]:
    """Return the canonical functions with their layer, in context order.

    Physical functions come first, then cyber ones, each group in
    declaration order. A class's layer is its declared layer, else
    physical when a physical component offers one of its members, else
    cyber when a cyber component does, else the layer its name encodes,
    else physical.

    """
    providers: Dict[str, set] = {}
    for component in model.components:
        for raw in component.offered_functions:
            providers.setdefault(raw, set()).add(component.layer)
    tagged = []
    for eq_class in equivalence.completed(model).classes:
        layer = eq_class.layer
        if layer is None:
            offered = set()
            for member in eq_class.members:
                offered |= providers.get(member, set())
            if "physical" in offered:
                layer = "physical"
            elif "cyber" in offered:
                layer = "cyber"
            else:
                layer = infer_layer(eq_class.canonical) or "physical"
                if layer == "inclusive":
                    layer = "physical"
        tagged.append((eq_class.canonical, layer))
    return [item for item in tagged if item[1] == "physical"] + [
        item for item in tagged if item[1] == "cyber"
    ]


def build_formal_context(
    model: CpsModel,
    equivalence: FunctionEquivalence,
    include_inclusive: bool = True,
) -> FormalContext:
    """Compile a model into a formal context.

    Objects are the atomic subsystems (composites are not objects).
    Attributes are the canonical functions (physical, then cyber)
    followed, if `include_inclusive` is True, by one inclusive attribute
    ``FI^<composite-id>`` per composite.

    Parameters
    ----------
    model : :class:`cpslattice.CpsModel`
        Model to compile.
    equivalence : :class:`cpslattice.FunctionEquivalence`
        Declared equivalence classes.
    include_inclusive : bool, default: True
        Whether to add the inclusive (part-of) attributes.

    Returns
    -------
    :class:`cpslattice.FormalContext`
        Compiled context with layer-tagged attributes.

    Raises
    ------
    ModelValidationError
        If the model or the equivalence declarations are invalid.

    """
    _require_valid(model, equivalence)
    profiles = atomic_function_profile(model, equivalence)
    functions = canonical_functions(model, equivalence)
    attributes = [name for name, _ in functions]
    layers = [layer for _, layer in functions]
    included = {}
    if include_inclusive:
        included = inclusive_attributes(model)
        for composite in model.composites:
            attributes.append(INCLUSIVE_PREFIX + composite.id)
            layers.append("inclusive")
    objects = list(profiles)

    incidence = np.zeros((len(objects), len(attributes)), bool)
    for row, obj in enumerate(objects):
        offered = profiles[obj].functions
        for col, (name, _) in enumerate(functions):
            incidence[row, col] = name in offered
        if include_inclusive:
            for col, composite in enumerate(
                model.composites, len(functions)
            ):
                incidence[row, col] = obj in included[composite.id]
    logger.debug(
        "Compiled model into a %dx%d context.", len(objects), len(attributes)
    )
    return FormalContext(
        objects=objects,
        attributes=attributes,
        incidence=incidence,
        attribute_layers=layers,
    )


def function_dependency_graph(
    model: CpsModel,
    equivalence: FunctionEquivalence,
    subsystems: AbstractSet[str],
    functions: Sequence[str],
) -> FunctionGraph:
    """Return the composite function graph a set of subsystems realizes.

    Nodes are the requested functions offered by the subsystems. There
    is an edge from `f` to `g` when a component of the subsystems
    offering `f` has a physical or cyber link to a component of the
    subsystems offering `g`.

    Parameters
    ----------
    model : :class:`cpslattice.CpsModel`
        Valid model.
    equivalence : :class:`cpslattice.FunctionEquivalence`
        Declared equivalence classes.
    subsystems : set of str
        Atomic subsystems, e.g. a minimal cover.
    functions : sequence of str
        Canonical functions of interest.

    Raises
    ------
    InputError
        If a subsystem is unknown.

    """
    canonical = equivalence.completed(model).canonical_map()
    components = model.component_map()
    owned = dict(_subsystems(model))
    wanted = set(functions)
    offers: Dict[str, set] = {}
    for subsystem in sorted(subsystems):
        if subsystem not in owned:
            raise InputError(f"Unknown subsystem {subsystem!r}.")
        for component_id in owned[subsystem]:
            offers[component_id] = {
                canonical[raw]
                for raw in components[component_id].offered_functions
            } & wanted
    nodes = [
        function
        for function in functions
        if any(function in offered for offered in offers.values())
    ]
    edges = set()
    for source, target in model.physical_links + model.cyber_links:
        for first in offers.get(source, ()):
            for second in offers.get(target, ()):
                if first != second:
                    edges.add((first, second))
    return FunctionGraph(nodes=tuple(nodes), edges=frozenset(edges))
