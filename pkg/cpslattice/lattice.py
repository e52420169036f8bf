"""Formal concepts and concept lattices.

Classes
-------

- ConceptLattice
- FormalConcept

Functions
---------

- build_lattice
- enumerate_concepts_bruteforce

"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

import networkx as nx

from .context import FormalContext, _iter_bits
from .errors import InputError
from .utils import check_capacity, max_objects

__all__ = [
    "ConceptLattice",
    "FormalConcept",
    "build_lattice",
    "enumerate_concepts_bruteforce",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FormalConcept:
    """A closed (extent, intent) pair of a formal context.

    Attributes
    ----------
    extent : frozenset of str
        Objects of the concept.
    intent : frozenset of str
        Attributes of the concept.

    """

    extent: FrozenSet[str]
    intent: FrozenSet[str]

    def sort_key(self) -> Tuple:
        """Return the key of the canonical concept order.

        Concepts are ordered by extent size (descending), then by the
        sorted extent, then by the sorted intent, comparing identifiers
        by code point.

        """
        return (-len(self.extent), sorted(self.extent), sorted(self.intent))

    def __str__(self) -> str:
        extent = ", ".join(sorted(self.extent))
        intent = ", ".join(sorted(self.intent))
        return f"<{{{extent}}}, {{{intent}}}>"


def _concept(context: FormalContext, extent: int, intent: int):
    return FormalConcept(
        context._objects_of(extent), context._attributes_of(intent)
    )


class ConceptLattice:
    """A concept lattice with its cover (Hasse) relation.

    Attributes
    ----------
    context : :class:`cpslattice.FormalContext`
        Context the lattice was built from.
    concepts : tuple of :class:`cpslattice.FormalConcept`
        All concepts in canonical order (see
        :meth:`cpslattice.FormalConcept.sort_key`).
    cover_edges : frozenset of (int, int)
        Pairs `(child, parent)` of concept indices where the child's
        extent is a maximal proper subset of the parent's.
    supremum_index : int
        Index of the top concept (all objects).
    infimum_index : int
        Index of the bottom concept (all attributes).

    """

    def __init__(
        self,
        context: FormalContext,
        concepts: Sequence[FormalConcept],
        cover_edges: Set[Tuple[int, int]],
    ):
        self.context = context
        self.concepts = tuple(concepts)
        self.cover_edges = frozenset(cover_edges)
        self._index = {
            concept.extent: idx for idx, concept in enumerate(self.concepts)
        }
        self._uppers: Dict[int, List[int]] = {
            idx: [] for idx in range(len(self.concepts))
        }
        self._lowers: Dict[int, List[int]] = {
            idx: [] for idx in range(len(self.concepts))
        }
        for child, parent in sorted(self.cover_edges):
            self._uppers[child].append(parent)
            self._lowers[parent].append(child)
        self.supremum_index = self._index[frozenset(context.objects)]
        self.infimum_index = self._index[
            context.derive_extent(frozenset(context.attributes))
        ]

    def __len__(self) -> int:
        return len(self.concepts)

    def __getitem__(self, key: int) -> FormalConcept:
        return self.concepts[key]

    def __iter__(self):
        return iter(self.concepts)

    def __repr__(self) -> str:
        return (
            f"ConceptLattice(n_concepts={len(self.concepts)}, "
            f"n_edges={len(self.cover_edges)})"
        )

    @property
    def supremum(self) -> FormalConcept:
        """Top concept."""
        return self.concepts[self.supremum_index]

    @property
    def infimum(self) -> FormalConcept:
        """Bottom concept."""
        return self.concepts[self.infimum_index]

    def index_of(self, extent: Set[str]) -> int:
        """Return the index of the concept with the given extent.

        Raises
        ------
        InputError
            If no concept has this extent.

        """
        try:
            return self._index[frozenset(extent)]
        except KeyError:
            raise InputError(
                f"No concept has extent {sorted(extent)}."
            ) from None

    def upper_covers(self, index: int) -> List[int]:
        """Return the indices of the concepts covering a concept."""
        return list(self._uppers[index])

    def lower_covers(self, index: int) -> List[int]:
        """Return the indices of the concepts covered by a concept."""
        return list(self._lowers[index])

    def meet(self, first: int, second: int) -> int:
        """Return the index of the meet of two concepts."""
        extent = self.concepts[first].extent & self.concepts[second].extent
        return self._index[self.context.closure_objects(extent)]

    def join(self, first: int, second: int) -> int:
        """Return the index of the join of two concepts."""
        intent = self.concepts[first].intent & self.concepts[second].intent
        return self._index[self.context.derive_extent(intent)]

    def attribute_concept(self, attribute: str) -> int:
        """Return the index of the largest concept holding an attribute."""
        return self._index[self.context.column(attribute)]

    def object_concept(self, obj: str) -> int:
        """Return the index of the smallest concept holding an object."""
        return self._index[self.context.closure_objects({obj})]

    def to_networkx(self) -> nx.DiGraph:
        """Return the Hasse diagram as a directed graph.

        Nodes are concept indices with `extent` and `intent` node
        attributes. Edges point from a concept to its upper covers.

        """
        graph = nx.DiGraph()
        for idx, concept in enumerate(self.concepts):
            graph.add_node(idx, extent=concept.extent, intent=concept.intent)
        graph.add_edges_from(sorted(self.cover_edges))
        return graph


def enumerate_concepts_bruteforce(
    context: FormalContext, max_size: int = None
) -> Set[FormalConcept]:
    """Return all concepts by closing every subset of one side.

    Close every subset of the smaller of the object and attribute sets.
    This costs 2^min(|O|, |A|) closures and serves as a reference for
    :func:`cpslattice.build_lattice`.

    Parameters
    ----------
    context : :class:`cpslattice.FormalContext`
        Context to enumerate.
    max_size : int, optional
        Limit on both the number of objects and of attributes. Defaults
        to :func:`cpslattice.max_objects`.

    Returns
    -------
    set of :class:`cpslattice.FormalConcept`
        All concepts of the context.

    Raises
    ------
    CapacityError
        If the context has more objects or attributes than allowed.

    """
    limit = max_objects(max_size)
    hint = "Use build_lattice instead."
    check_capacity(len(context.objects), "Number of objects", limit, hint)
    check_capacity(
        len(context.attributes), "Number of attributes", limit, hint
    )

    pairs = set()
    if len(context.attributes) <= len(context.objects):
        for subset in range(1 << len(context.attributes)):
            extent = context._extent_mask(subset)
            pairs.add((extent, context._intent_mask(extent)))
    else:
        for subset in range(1 << len(context.objects)):
            intent = context._intent_mask(subset)
            pairs.add((context._extent_mask(intent), intent))
    return {_concept(context, extent, intent) for extent, intent in pairs}


def _lower_neighbors(
    context: FormalContext, extent: int, intent: int
) -> List[Tuple[int, int]]:
    # Candidates come from adding one attribute; the lower covers are
    # those with maximal extents.
    candidates: Dict[int, int] = {}
    missing = context._all_attributes & ~intent
    for idx in _iter_bits(missing):
        child = extent & context._columns[idx]
        if child not in candidates:
            candidates[child] = context._intent_mask(child)
    extents = sorted(candidates, key=lambda mask: -bin(mask).count("1"))
    maximal: List[int] = []
    for child in extents:
        if not any(child & kept == child for kept in maximal):
            maximal.append(child)
    return [(child, candidates[child]) for child in maximal]


def build_lattice(context: FormalContext) -> ConceptLattice:
    """Return the concept lattice of a context.

    Generate the lattice top-down by computing the lower neighbours of
    each concept (Bordat's method). Every cover pair is found exactly
    when its lower concept is generated, so the cover relation comes
    without a separate transitive reduction.

    Parameters
    ----------
    context : :class:`cpslattice.FormalContext`
        Context to build the lattice of.

    Returns
    -------
    :class:`cpslattice.ConceptLattice`
        Lattice with concepts in canonical order.

    """
    top_intent = context._intent_mask(context._all_objects)
    top = (context._extent_mask(top_intent), top_intent)
    intents = {top[0]: top[1]}
    edges = set()
    queue = deque([top])
    while queue:
        extent, intent = queue.popleft()
        for child, child_intent in _lower_neighbors(context, extent, intent):
            edges.add((child, extent))
            if child not in intents:
                intents[child] = child_intent
                queue.append((child, child_intent))

    concepts = {
        extent: _concept(context, extent, intent)
        for extent, intent in intents.items()
    }
    ordered = sorted(concepts, key=lambda mask: concepts[mask].sort_key())
    position = {mask: idx for idx, mask in enumerate(ordered)}
    cover_edges = {
        (position[child], position[parent]) for child, parent in edges
    }
    logger.debug(
        "Built lattice of %d concepts and %d cover edges from a %dx%d "
        "context.",
        len(ordered),
        len(cover_edges),
        len(context.objects),
        len(context.attributes),
    )
    return ConceptLattice(
        context, [concepts[mask] for mask in ordered], cover_edges
    )
