"""Classes for cyber-physical system models.

A model follows the CPS meta-model: physical and cyber components, atomic
systems built from one or more components of each layer, composite
systems aggregating other systems, and the physical and cyber
links between components. Modeling follows a two-layer separation:
physical components are the terminal sensing and actuating elements, and
cyber components provide data and decisions. A node doing both is
modeled as two components, one per layer.

Classes
-------

- AtomicCps
- Component
- CompositeCps
- CpsModel
- Diagnostic
- Environment
- EquivalenceClass
- FunctionEquivalence
- ModelDocument
- Severity

Functions
---------

- validate_model

Variables
---------

- PHYSICAL_KINDS

"""
import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .analysis import FunctionGraph
from .errors import InputError

__all__ = [
    "AtomicCps",
    "Component",
    "CompositeCps",
    "CpsModel",
    "Diagnostic",
    "Environment",
    "EquivalenceClass",
    "FunctionEquivalence",
    "ModelDocument",
    "Severity",
    "validate_model",
    "PHYSICAL_KINDS",
]

logger = logging.getLogger(__name__)

PHYSICAL_KINDS = ("sensor", "actuator", "sensor_actuator")
COMPONENT_LAYERS = ("physical", "cyber")


@dataclass(frozen=True)
class Component:
    """A physical or cyber component.

    Attributes
    ----------
    id : str
        Component identifier.
    layer : {'physical', 'cyber'}
        Layer of the component.
    inputs : tuple of str
        Input ports. Must not be empty.
    outputs : tuple of str
        Output ports. Must not be empty.
    offered_functions : tuple of str
        Raw function identifiers, e.g. ``F_P2^1``. Must not be empty.
    physical_kind : {'sensor', 'actuator', 'sensor_actuator'}, optional
        Required for physical components and forbidden for cyber ones.

    """

    id: str
    layer: str
    inputs: Tuple[str, ...]
    outputs: Tuple[str, ...]
    offered_functions: Tuple[str, ...]
    physical_kind: Optional[str] = None


@dataclass(frozen=True)
class Environment:
    """Reserved flow endpoints standing for the outside world."""

    physical_source_sink: str = "e_P"
    cyber_source_sink: str = "e_C"


@dataclass(frozen=True)
class AtomicCps:
    """A system owning its components and no subsystems.

    Attributes
    ----------
    id : str
        System identifier.
    components : tuple of str
        Identifiers of its components. At least one physical and one
        cyber component are required.

    """

    id: str
    components: Tuple[str, ...]


@dataclass(frozen=True)
class CompositeCps:
    """A system aggregating other systems.

    Attributes
    ----------
    id : str
        System identifier.
    logical_members : tuple of str
        Systems the composite logically includes.
    physical_parts : tuple of str
        Systems that are physically part of the composite. Being part of
        a composite entails being logically included by it.
    own_components : tuple of str
        Components owned by the composite itself.

    """

    id: str
    logical_members: Tuple[str, ...]
    physical_parts: Tuple[str, ...] = ()
    own_components: Tuple[str, ...] = ()

    @property
    def members(self) -> Tuple[str, ...]:
        """Logical members including the entailed physical parts."""
        extra = tuple(
            part
            for part in self.physical_parts
            if part not in self.logical_members
        )
        return self.logical_members + extra


@dataclass(frozen=True)
class CpsModel:
    """A cyber-physical system model.

    Attributes
    ----------
    components : tuple of :class:`cpslattice.Component`
        All components.
    atomics : tuple of :class:`cpslattice.AtomicCps`
        Atomic systems.
    composites : tuple of :class:`cpslattice.CompositeCps`
        Composite systems.
    physical_links : tuple of (str, str)
        Physical transmission links between physical components or
        the physical environment.
    cyber_links : tuple of (str, str)
        Information or control channels between cyber components or
        the cyber environment.
    environment : :class:`cpslattice.Environment`
        Reserved environment endpoints.

    """

    components: Tuple[Component, ...] = ()
    atomics: Tuple[AtomicCps, ...] = ()
    composites: Tuple[CompositeCps, ...] = ()
    physical_links: Tuple[Tuple[str, str], ...] = ()
    cyber_links: Tuple[Tuple[str, str], ...] = ()
    environment: Environment = field(default_factory=Environment)

    def component_map(self) -> Dict[str, Component]:
        """Return the components keyed by identifier."""
        return {component.id: component for component in self.components}

    def composite_map(self) -> Dict[str, CompositeCps]:
        """Return the composites keyed by identifier."""
        return {composite.id: composite for composite in self.composites}

    def composition_graph(self) -> nx.DiGraph:
        """Return the graph from each composite to its members."""
        graph = nx.DiGraph()
        graph.add_nodes_from(atomic.id for atomic in self.atomics)
        graph.add_nodes_from(composite.id for composite in self.composites)
        for composite in self.composites:
            for member in composite.members:
                graph.add_edge(composite.id, member)
        return graph

    def entailed(self) -> "CpsModel":
        """Return the model with part-of memberships made explicit."""
        composites = tuple(
            replace(composite, logical_members=composite.members)
            for composite in self.composites
        )
        return replace(self, composites=composites)


@dataclass(frozen=True)
class EquivalenceClass:
    """Raw component functions an expert declares to be the same.

    Attributes
    ----------
    canonical : str
        Canonical function identifier used as context attribute.
    members : tuple of str
        Raw function identifiers.
    layer : {'physical', 'cyber'}, optional
        Layer of the canonical function. Inferred when not given.

    """

    canonical: str
    members: Tuple[str, ...]
    layer: Optional[str] = None


@dataclass(frozen=True)
class FunctionEquivalence:
    """Declared equivalence classes of component functions.

    Attributes
    ----------
    classes : tuple of :class:`cpslattice.EquivalenceClass`
        Classes in declaration order.

    """

    classes: Tuple[EquivalenceClass, ...] = ()

    def canonical_map(self) -> Dict[str, str]:
        """Return the canonical identifier of each raw function."""
        mapping: Dict[str, str] = {}
        for eq_class in self.classes:
            for member in eq_class.members:
                mapping.setdefault(member, eq_class.canonical)
        return mapping

    def canonical_of(self, raw: str) -> str:
        """Return the canonical identifier of a raw function.

        Raises
        ------
        InputError
            If the raw function belongs to no class.

        """
        try:
            return self.canonical_map()[raw]
        except KeyError:
            raise InputError(
                f"Function {raw!r} belongs to no equivalence class."
            ) from None

    def completed(self, model: CpsModel) -> "FunctionEquivalence":
        """Return the classes with singletons for undeclared functions.

        A singleton class is named after its raw function and follows
        the declared classes, in order of first appearance over the
        model components.

        """
        known = self.canonical_map()
        canonicals = {eq_class.canonical for eq_class in self.classes}
        extra: List[EquivalenceClass] = []
        for component in model.components:
            for raw in component.offered_functions:
                if raw in known:
                    continue
                if raw in canonicals:
                    raise InputError(
                        f"Undeclared function {raw!r} clashes with a "
                        "canonical function of the same name."
                    )
                logger.warning(
                    "Function %r has no declared equivalence class; using "
                    "a singleton class.",
                    raw,
                )
                known[raw] = raw
                extra.append(EquivalenceClass(raw, (raw,)))
        return FunctionEquivalence(self.classes + tuple(extra))


@dataclass(frozen=True)
class ModelDocument:
    """Contents of a model file.

    Attributes
    ----------
    model : :class:`cpslattice.CpsModel`
        The CPS model.
    equivalence : :class:`cpslattice.FunctionEquivalence`
        Expert-declared function equivalences.
    query : :class:`cpslattice.FunctionGraph`, optional
        Requested functions and their dependency edges.

    """

    model: CpsModel
    equivalence: FunctionEquivalence = field(
        default_factory=FunctionEquivalence
    )
    query: Optional[FunctionGraph] = None


class Severity(str, Enum):
    """Severity of a validation diagnostic."""

    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


@dataclass(frozen=True)
class Diagnostic:
    """A finding of model validation.

    Attributes
    ----------
    code : str
        Machine-stable code, e.g. ``CYBER_MISSING``.
    severity : :class:`cpslattice.Severity`
        Error, warning or info.
    subject : str
        Identifier of the offending element.
    message : str
        Human-readable explanation.

    """

    code: str
    severity: Severity
    subject: str
    message: str

    def __str__(self) -> str:
        return (
            f"{self.severity.value}: {self.code} {self.subject}: "
            f"{self.message}"
        )


def _error(code, subject, message):
    return Diagnostic(code, Severity.ERROR, subject, message)


def _duplicates(ids: Sequence[str]) -> List[str]:
    seen, repeated = set(), []
    for identifier in ids:
        if identifier in seen and identifier not in repeated:
            repeated.append(identifier)
        seen.add(identifier)
    return repeated


def _check_components(model: CpsModel) -> List[Diagnostic]:
    diagnostics = []
    reserved = {
        model.environment.physical_source_sink,
        model.environment.cyber_source_sink,
    }
    for component in model.components:
        if component.id in reserved:
            diagnostics.append(
                _error(
                    "RESERVED_ID",
                    component.id,
                    "Environment endpoints cannot be components.",
                )
            )
        if component.layer not in COMPONENT_LAYERS:
            diagnostics.append(
                _error(
                    "LAYER_INVALID",
                    component.id,
                    f"Layer must be 'physical' or 'cyber', not "
                    f"{component.layer!r}.",
                )
            )
        if not component.inputs or not component.outputs:
            missing = "inputs" if not component.inputs else "outputs"
            diagnostics.append(
                _error(
                    "PORT_MISSING",
                    component.id,
                    f"A component needs an input and an output; {missing} "
                    "is empty.",
                )
            )
        if not component.offered_functions:
            diagnostics.append(
                _error(
                    "FUNCTION_MISSING",
                    component.id,
                    "A component must offer at least one function.",
                )
            )
        if component.layer == "physical":
            if component.physical_kind not in PHYSICAL_KINDS:
                diagnostics.append(
                    _error(
                        "KIND_MISMATCH",
                        component.id,
                        "A physical component must be a sensor, an "
                        "actuator or a sensor_actuator.",
                    )
                )
        elif component.physical_kind is not None:
            diagnostics.append(
                _error(
                    "KIND_MISMATCH",
                    component.id,
                    "Only physical components have a physical kind.",
                )
            )
    for identifier in _duplicates([c.id for c in model.components]):
        diagnostics.append(
            _error("DUPLICATE_ID", identifier, "Component id repeats.")
        )
    return diagnostics


def _check_systems(model: CpsModel) -> List[Diagnostic]:
    diagnostics = []
    components = model.component_map()
    owner: Dict[str, str] = {}

    def claim(system_id, component_id):
        if component_id not in components:
            diagnostics.append(
                _error(
                    "UNKNOWN_COMPONENT",
                    system_id,
                    f"Component {component_id!r} does not exist.",
                )
            )
            return None
        if component_id in owner and owner[component_id] != system_id:
            diagnostics.append(
                _error(
                    "COMPONENT_SHARED",
                    component_id,
                    f"Component belongs to both {owner[component_id]!r} "
                    f"and {system_id!r}.",
                )
            )
        owner.setdefault(component_id, system_id)
        return components[component_id]

    for atomic in model.atomics:
        layers = set()
        for component_id in atomic.components:
            component = claim(atomic.id, component_id)
            if component is not None:
                layers.add(component.layer)
        if "physical" not in layers:
            diagnostics.append(
                _error(
                    "PHYSICAL_MISSING",
                    atomic.id,
                    "An atomic CPS needs at least one physical component.",
                )
            )
        if "cyber" not in layers:
            diagnostics.append(
                _error(
                    "CYBER_MISSING",
                    atomic.id,
                    "An atomic CPS needs at least one cyber component.",
                )
            )

    system_ids = [atomic.id for atomic in model.atomics] + [
        composite.id for composite in model.composites
    ]
    known = set(system_ids)
    for composite in model.composites:
        for component_id in composite.own_components:
            claim(composite.id, component_id)
        for member in composite.members:
            if member not in known:
                diagnostics.append(
                    _error(
                        "UNKNOWN_CPS",
                        composite.id,
                        f"Member {member!r} does not exist.",
                    )
                )
        for part in composite.physical_parts:
            if part not in composite.logical_members:
                logger.warning(
                    "%s is physically part of %s; treating it as a logical "
                    "member.",
                    part,
                    composite.id,
                )
                diagnostics.append(
                    Diagnostic(
                        "PART_OF_ENTAILED",
                        Severity.INFO,
                        composite.id,
                        f"{part!r} is physically part of the composite "
                        "and therefore logically included.",
                    )
                )
        if not composite.members:
            diagnostics.append(
                _error(
                    "COMPOSITE_EMPTY",
                    composite.id,
                    "A composite must include at least one system.",
                )
            )
    for identifier in _duplicates(system_ids):
        diagnostics.append(
            _error("DUPLICATE_ID", identifier, "System id repeats.")
        )
    diagnostics.extend(_cycle_diagnostics(model))

    for component in model.components:
        if component.id not in owner:
            diagnostics.append(
                Diagnostic(
                    "COMPONENT_ORPHAN",
                    Severity.WARNING,
                    component.id,
                    "Component belongs to no system.",
                )
            )
    return diagnostics


def _cycle_diagnostics(model: CpsModel) -> List[Diagnostic]:
    graph = model.composition_graph()
    diagnostics = []
    cycles = [
        sorted(component)
        for component in nx.strongly_connected_components(graph)
        if len(component) > 1
        or any(graph.has_edge(node, node) for node in component)
    ]
    for cycle in sorted(cycles):
        diagnostics.append(
            _error(
                "COMPOSITION_CYCLE",
                cycle[0],
                "Composition is cyclic through " + ", ".join(cycle) + ".",
            )
        )
    return diagnostics


def _check_links(model: CpsModel) -> List[Diagnostic]:
    diagnostics = []
    components = model.component_map()
    for links, layer, endpoint, code in (
        (
            model.physical_links,
            "physical",
            model.environment.physical_source_sink,
            "PHYSICAL_LINK_ENDPOINT",
        ),
        (
            model.cyber_links,
            "cyber",
            model.environment.cyber_source_sink,
            "CYBER_LINK_ENDPOINT",
        ),
    ):
        for source, target in links:
            for node in (source, target):
                if node == endpoint:
                    continue
                component = components.get(node)
                if component is None or component.layer != layer:
                    diagnostics.append(
                        _error(
                            code,
                            node,
                            f"Link {source} -> {target} must connect "
                            f"{layer} components or {endpoint!r}.",
                        )
                    )
    return diagnostics


def _check_equivalence(
    model: CpsModel, equivalence: FunctionEquivalence
) -> List[Diagnostic]:
    diagnostics = []
    for canonical in _duplicates(
        [eq_class.canonical for eq_class in equivalence.classes]
    ):
        diagnostics.append(
            _error(
                "EQUIVALENCE_DUPLICATE",
                canonical,
                "Canonical function is declared twice.",
            )
        )
    offered = {
        raw
        for component in model.components
        for raw in component.offered_functions
    }
    owner: Dict[str, str] = {}
    for eq_class in equivalence.classes:
        if eq_class.layer is not None and eq_class.layer not in (
            COMPONENT_LAYERS
        ):
            diagnostics.append(
                _error(
                    "LAYER_INVALID",
                    eq_class.canonical,
                    f"Layer must be 'physical' or 'cyber', not "
                    f"{eq_class.layer!r}.",
                )
            )
        for member in eq_class.members:
            if member in owner and owner[member] != eq_class.canonical:
                diagnostics.append(
                    _error(
                        "EQUIVALENCE_OVERLAP",
                        member,
                        f"Function is declared in both {owner[member]!r} "
                        f"and {eq_class.canonical!r}.",
                    )
                )
            owner.setdefault(member, eq_class.canonical)
            if member not in offered:
                diagnostics.append(
                    Diagnostic(
                        "FUNCTION_UNOFFERED",
                        Severity.WARNING,
                        member,
                        "No component offers this function.",
                    )
                )
    return diagnostics


def validate_model(
    model: CpsModel, equivalence: FunctionEquivalence = None
) -> List[Diagnostic]:
    """Return all meta-model violations of a model.

    Parameters
    ----------
    model : :class:`cpslattice.CpsModel`
        Model to check.
    equivalence : :class:`cpslattice.FunctionEquivalence`, optional
        Equivalence declarations to check along with the model.

    Returns
    -------
    list of :class:`cpslattice.Diagnostic`
        Findings in a stable order. A model is valid if none of them is
        an error. Part-of memberships are entailed and reported as info.

    """
    diagnostics = _check_components(model)
    diagnostics.extend(_check_systems(model))
    diagnostics.extend(_check_links(model))
    if equivalence is not None:
        diagnostics.extend(_check_equivalence(model, equivalence))
    n_errors = sum(d.severity is Severity.ERROR for d in diagnostics)
    logger.debug(
        "Validated model: %d diagnostics, %d errors.",
        len(diagnostics),
        n_errors,
    )
    return diagnostics
