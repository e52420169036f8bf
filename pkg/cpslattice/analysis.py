"""Redundancy, resiliency and query analyses.

Classes
-------

- ConceptCombination
- FunctionGraph
- IsomorphismResult
- QueryResult
- RedundancyReport

Functions
---------

- concept_combinations
- query_isomorphism_check
- redundancy_report
- removal_impact
- resiliency_gaps
- satisfy_query

Variables
---------

- DEFAULT_MAX_GRAPH_NODES

"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import (
    AbstractSet,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Set,
    Tuple,
)

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import DiGraphMatcher

from .context import FormalContext, _iter_bits
from .errors import InputError
from .lattice import ConceptLattice
from .utils import check_capacity, max_objects

__all__ = [
    "ConceptCombination",
    "FunctionGraph",
    "IsomorphismResult",
    "QueryResult",
    "RedundancyReport",
    "concept_combinations",
    "query_isomorphism_check",
    "redundancy_report",
    "removal_impact",
    "resiliency_gaps",
    "satisfy_query",
    "DEFAULT_MAX_GRAPH_NODES",
]

logger = logging.getLogger(__name__)

DEFAULT_MAX_GRAPH_NODES = 10


@dataclass(frozen=True)
class RedundancyReport:
    """Provider counts and duplicated subsystems of a context.

    Attributes
    ----------
    multiplicity : dict of str to int
        Number of providers of each analyzed function, in context order.
    duplicate_groups : tuple of tuple of str
        Maximal groups (size two or more) of objects with identical
        rows, members and groups in context order.
    gaps : tuple of str
        Functions with at most one provider.
    unavailable : tuple of str
        Functions with no provider at all (a subset of `gaps`).
    layer : str, optional
        Layer the context was projected on before the analysis.

    """

    multiplicity: Dict[str, int]
    duplicate_groups: Tuple[Tuple[str, ...], ...]
    gaps: Tuple[str, ...]
    unavailable: Tuple[str, ...]
    layer: Optional[str] = None

    @property
    def single_points_of_failure(self) -> Tuple[str, ...]:
        """Functions with exactly one provider."""
        return tuple(f for f in self.gaps if self.multiplicity[f] == 1)


@dataclass(frozen=True)
class ConceptCombination:
    """Concepts whose intents together cover a request.

    Attributes
    ----------
    concepts : tuple of int
        Concept indices, ascending.
    extents : tuple of frozenset of str
        Extent of each concept, aligned with `concepts`.

    """

    concepts: Tuple[int, ...]
    extents: Tuple[FrozenSet[str], ...]

    @property
    def extent_union(self) -> FrozenSet[str]:
        """Candidate subsystems of the combination."""
        return frozenset().union(*self.extents)

    def subsystem_choices(self) -> List[FrozenSet[str]]:
        """Return the subsystem sets picking one object per concept.

        Duplicates are removed and the sets are sorted by size, then by
        their sorted members.

        """
        choices = {
            frozenset(choice) for choice in itertools.product(*self.extents)
        }
        return sorted(choices, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True)
class QueryResult:
    """Ways of satisfying a function request.

    Attributes
    ----------
    requested : tuple of str
        Requested functions in context order.
    minimal_covers : tuple of frozenset of str
        Inclusion-minimal subsystem sets offering every requested
        function, sorted by size, then by sorted members.
    concept_combinations : tuple of :class:`cpslattice.ConceptCombination`
        Inclusion-minimal concept sets whose intents cover the request.
        Empty unless a lattice was given.
    structural_matches : tuple of bool, optional
        Whether each cover's function graph matches the query graph.
        Only set when a dependency structure was checked.

    """

    requested: Tuple[str, ...]
    minimal_covers: Tuple[FrozenSet[str], ...]
    concept_combinations: Tuple[ConceptCombination, ...] = ()
    structural_matches: Optional[Tuple[bool, ...]] = None

    @property
    def satisfiable(self) -> bool:
        """Whether at least one cover exists."""
        return bool(self.minimal_covers)


@dataclass(frozen=True)
class FunctionGraph:
    """A directed graph of functions with dependency edges.

    An edge `(a, b)` means the output of `a` feeds the input of `b`.

    Attributes
    ----------
    nodes : tuple of str
        Node identifiers.
    edges : frozenset of (str, str)
        Directed edges between declared nodes. No self-loops.
    labels : dict of str to frozenset of str
        Functions offered (candidate graphs) or requested (query graphs)
        by each node. Defaults to the node identifier itself.

    """

    nodes: Tuple[str, ...]
    edges: FrozenSet[Tuple[str, str]] = frozenset()
    labels: Mapping[str, FrozenSet[str]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", frozenset(self.edges))
        labels = {
            node: frozenset(self.labels.get(node, (node,)))
            for node in self.nodes
        }
        object.__setattr__(self, "labels", labels)
        self.validate()

    def validate(self):
        """Raise an error if an edge is malformed.

        Returns
        -------
        Object itself.

        """
        if len(set(self.nodes)) != len(self.nodes):
            raise InputError("Function graph nodes must be unique.")
        nodes = set(self.nodes)
        for source, target in sorted(self.edges):
            if source not in nodes or target not in nodes:
                raise InputError(
                    f"Edge {source} -> {target} uses an undeclared node."
                )
            if source == target:
                raise InputError(f"Self-loop on {source!r}.")
        return self

    def to_networkx(self) -> nx.DiGraph:
        """Return the graph as a networkx DiGraph with `functions` labels."""
        graph = nx.DiGraph()
        for node in self.nodes:
            graph.add_node(node, functions=self.labels[node])
        graph.add_edges_from(sorted(self.edges))
        return graph


@dataclass(frozen=True)
class IsomorphismResult:
    """Outcome of a function-graph isomorphism check.

    Attributes
    ----------
    is_isomorphic : bool
        Whether a label-compatible, edge-preserving bijection exists.
    mapping : dict of str to str, optional
        Witness bijection from query nodes to candidate nodes.

    """

    is_isomorphic: bool
    mapping: Optional[Dict[str, str]] = None

    def __bool__(self) -> bool:
        return self.is_isomorphic


def _analyzed(
    context: FormalContext, layer: str = None, include_inclusive=False
) -> FormalContext:
    attributes = [
        attribute
        for attribute, tag in zip(context.attributes, context.attribute_layers)
        if (layer is None or tag == layer)
        and (include_inclusive or tag != "inclusive")
    ]
    return context.project(attributes)


def _duplicate_groups(context: FormalContext) -> List[Tuple[str, ...]]:
    if not context.objects:
        return []
    if not context.attributes:
        labels = np.zeros(len(context.objects), int)
    else:
        _, labels = np.unique(
            context.incidence, axis=0, return_inverse=True
        )
        labels = np.asarray(labels).reshape(-1)
    groups: Dict[int, List[str]] = {}
    for obj, label in zip(context.objects, labels):
        groups.setdefault(int(label), []).append(obj)
    found = [tuple(group) for group in groups.values() if len(group) > 1]
    order = {obj: idx for idx, obj in enumerate(context.objects)}
    return sorted(found, key=lambda group: order[group[0]])


def redundancy_report(
    context: FormalContext,
    layer: str = None,
    include_inclusive: bool = False,
) -> RedundancyReport:
    """Return the redundancy of each function in a context.

    Parameters
    ----------
    context : :class:`cpslattice.FormalContext`
        Context to analyze.
    layer : {'physical', 'cyber', 'inclusive'}, optional
        Project the context on the attributes of this layer first.
    include_inclusive : bool, default: False
        Whether inclusive (part-of) attributes take part in the
        analysis. They encode structure rather than capability.

    Returns
    -------
    :class:`cpslattice.RedundancyReport`
        Provider counts, gaps and duplicated subsystems.

    """
    analyzed = _analyzed(
        context, layer, include_inclusive or layer == "inclusive"
    )
    counts = analyzed.incidence.sum(axis=0)
    multiplicity = {
        attribute: int(count)
        for attribute, count in zip(analyzed.attributes, counts)
    }
    gaps = tuple(f for f, count in multiplicity.items() if count <= 1)
    unavailable = tuple(f for f, count in multiplicity.items() if not count)
    return RedundancyReport(
        multiplicity=multiplicity,
        duplicate_groups=tuple(_duplicate_groups(analyzed)),
        gaps=gaps,
        unavailable=unavailable,
        layer=layer,
    )


def resiliency_gaps(
    context: FormalContext, include_inclusive: bool = False
) -> FrozenSet[str]:
    """Return the functions offered by exactly one subsystem.

    These are single points of failure: if their provider stops, no
    other subsystem can replace them.

    """
    analyzed = _analyzed(context, include_inclusive=include_inclusive)
    counts = analyzed.incidence.sum(axis=0)
    return frozenset(
        attribute
        for attribute, count in zip(analyzed.attributes, counts)
        if count == 1
    )


def removal_impact(
    context: FormalContext,
    removed: AbstractSet[str],
    include_inclusive: bool = False,
) -> FrozenSet[str]:
    """Return the functions lost when some subsystems stop working.

    Parameters
    ----------
    context : :class:`cpslattice.FormalContext`
        Context to analyze.
    removed : set of str
        Objects to remove.
    include_inclusive : bool, default: False
        Whether inclusive attributes are considered.

    Returns
    -------
    frozenset of str
        Functions that had a provider before and have none after.

    Raises
    ------
    InputError
        If an object is not in the context.

    """
    analyzed = _analyzed(context, include_inclusive=include_inclusive)
    keep = np.ones(len(analyzed.objects), bool)
    for obj in removed:
        keep[analyzed.object_index(obj)] = False
    before = analyzed.incidence.any(axis=0)
    after = analyzed.incidence[keep].any(axis=0)
    return frozenset(
        attribute
        for attribute, was, still in zip(analyzed.attributes, before, after)
        if was and not still
    )


def _minimal_covers(rows: Sequence[int], target: int) -> List[int]:
    """Return every inclusion-minimal set of rows covering `target`.

    Rows and target are attribute bitmasks; each returned cover is a
    bitmask over row positions. Branches on the uncovered attribute with
    the fewest providers and prunes partial selections in which some
    member no longer covers anything on its own.

    """
    providers = {
        bit: [idx for idx, row in enumerate(rows) if row >> bit & 1]
        for bit in _iter_bits(target)
    }
    found: Set[int] = set()

    def is_irredundant(chosen: List[int]) -> bool:
        for idx in chosen:
            others = 0
            for other in chosen:
                if other != idx:
                    others |= rows[other]
            if not rows[idx] & target & ~others:
                return False
        return True

    def search(chosen: List[int], covered: int):
        if not is_irredundant(chosen):
            return
        uncovered = target & ~covered
        if not uncovered:
            mask = 0
            for idx in chosen:
                mask |= 1 << idx
            found.add(mask)
            return
        bit = min(_iter_bits(uncovered), key=lambda b: len(providers[b]))
        for idx in providers[bit]:
            chosen.append(idx)
            search(chosen, covered | rows[idx])
            chosen.pop()

    if all(providers.values()):
        search([], 0)
    return sorted(found)


def _check_requested(
    context: FormalContext, requested: Iterable[str]
) -> Tuple[str, ...]:
    requested = set(requested)
    mask = context._attribute_mask(requested)
    return tuple(context.attributes[idx] for idx in _iter_bits(mask))


def satisfy_query(
    context: FormalContext,
    requested: AbstractSet[str],
    lattice: ConceptLattice = None,
    max_size: int = None,
) -> QueryResult:
    """Return the minimal subsystem sets offering requested functions.

    Parameters
    ----------
    context : :class:`cpslattice.FormalContext`
        Context of subsystems and functions.
    requested : set of str
        Requested functions.
    lattice : :class:`cpslattice.ConceptLattice`, optional
        Lattice of `context`. If given, concept combinations are
        computed too (see :func:`cpslattice.concept_combinations`).
    max_size : int, optional
        Limit on the number of objects. Defaults to
        :func:`cpslattice.max_objects`.

    Returns
    -------
    :class:`cpslattice.QueryResult`
        Covers in canonical order. The request is unsatisfiable exactly
        when some requested function has no provider. The empty request
        has one cover, the empty set.

    Raises
    ------
    InputError
        If a requested function is not in the context.
    CapacityError
        If the context has too many objects.

    """
    limit = max_objects(max_size)
    ordered = _check_requested(context, requested)
    check_capacity(len(context.objects), "Number of objects", limit)
    target = context._attribute_mask(ordered)
    covers = [
        context._objects_of(mask)
        for mask in _minimal_covers(context._rows, target)
    ]
    covers.sort(key=lambda cover: (len(cover), sorted(cover)))
    logger.debug(
        "Found %d minimal covers for %d requested functions.",
        len(covers),
        len(ordered),
    )
    combinations: Tuple[ConceptCombination, ...] = ()
    if lattice is not None:
        combinations = tuple(
            concept_combinations(lattice, requested, max_size=max_size)
        )
    return QueryResult(
        requested=ordered,
        minimal_covers=tuple(covers),
        concept_combinations=combinations,
    )


def concept_combinations(
    lattice: ConceptLattice,
    requested: AbstractSet[str],
    max_size: int = None,
) -> List[ConceptCombination]:
    """Return the minimal concept sets whose intents cover a request.

    Parameters
    ----------
    lattice : :class:`cpslattice.ConceptLattice`
        Lattice of the queried context.
    requested : set of str
        Requested functions.
    max_size : int, optional
        Limit on the number of objects of the lattice's context.

    Returns
    -------
    list of :class:`cpslattice.ConceptCombination`
        Inclusion-minimal sets of concepts other than the infimum,
        sorted by size, then by concept indices. The empty request gives
        the empty combination.

    Raises
    ------
    InputError
        If a requested function is not in the context.
    CapacityError
        If the context has too many objects.

    """
    context = lattice.context
    limit = max_objects(max_size)
    ordered = _check_requested(context, requested)
    check_capacity(len(context.objects), "Number of objects", limit)
    target = context._attribute_mask(ordered)
    candidates = [
        idx for idx in range(len(lattice)) if idx != lattice.infimum_index
    ]
    rows = [
        context._attribute_mask(lattice[idx].intent) for idx in candidates
    ]
    combinations = []
    for mask in _minimal_covers(rows, target):
        indices = tuple(candidates[pos] for pos in _iter_bits(mask))
        combinations.append(
            ConceptCombination(
                concepts=indices,
                extents=tuple(lattice[idx].extent for idx in indices),
            )
        )
    combinations.sort(key=lambda c: (len(c.concepts), c.concepts))
    return combinations


def query_isomorphism_check(
    candidate: FunctionGraph,
    query: FunctionGraph,
    max_nodes: int = DEFAULT_MAX_GRAPH_NODES,
) -> IsomorphismResult:
    """Check whether a candidate graph realizes a query graph.

    A query node may map only to a candidate node offering all the
    functions the query node requests. Edges must be preserved in both
    directions.

    Parameters
    ----------
    candidate : :class:`cpslattice.FunctionGraph`
        Composite function graph of subsystems.
    query : :class:`cpslattice.FunctionGraph`
        Requested function graph.
    max_nodes : int, default: `DEFAULT_MAX_GRAPH_NODES` (10)
        Limit on the number of nodes of each graph.

    Returns
    -------
    :class:`cpslattice.IsomorphismResult`
        Verdict and, when true, a witness mapping from query nodes to
        candidate nodes.

    Raises
    ------
    CapacityError
        If a graph has more than `max_nodes` nodes.

    """
    check_capacity(len(candidate.nodes), "Candidate graph size", max_nodes)
    check_capacity(len(query.nodes), "Query graph size", max_nodes)
    if len(candidate.nodes) != len(query.nodes) or len(
        candidate.edges
    ) != len(query.edges):
        return IsomorphismResult(False)
    matcher = DiGraphMatcher(
        candidate.to_networkx(),
        query.to_networkx(),
        node_match=lambda offered, wanted: wanted["functions"]
        <= offered["functions"],
    )
    found = next(matcher.isomorphisms_iter(), None)
    if found is None:
        return IsomorphismResult(False)
    mapping = {wanted: offered for offered, wanted in sorted(found.items())}
    return IsomorphismResult(True, mapping)
