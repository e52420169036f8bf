"""Functions for formal contexts.

Functions
---------

- closure_attrs
- closure_objects
- derive_extent
- derive_intent
- project_context

"""
from typing import AbstractSet, FrozenSet

from .context import FormalContext

__all__ = [
    "closure_attrs",
    "closure_objects",
    "derive_extent",
    "derive_intent",
    "project_context",
]


def derive_intent(
    context: FormalContext, objects: AbstractSet[str]
) -> FrozenSet[str]:
    """Return the attributes shared by all the given objects.

    Parameters
    ----------
    context : :class:`cpslattice.FormalContext`
        Context to derive in.
    objects : set of str
        Objects of the context. The empty set derives to all
        attributes.

    Returns
    -------
    frozenset of str
        Common attributes.

    Raises
    ------
    InputError
        If an object is not in the context.

    See Also
    --------
    :func:`cpslattice.derive_extent` : The dual derivation.

    """
    return context.derive_intent(objects)


def derive_extent(
    context: FormalContext, attributes: AbstractSet[str]
) -> FrozenSet[str]:
    """Return the objects having all the given attributes.

    Parameters
    ----------
    context : :class:`cpslattice.FormalContext`
        Context to derive in.
    attributes : set of str
        Attributes of the context. The empty set derives to all
        objects.

    Returns
    -------
    frozenset of str
        Objects having every attribute.

    Raises
    ------
    InputError
        If an attribute is not in the context.

    See Also
    --------
    :func:`cpslattice.derive_intent` : The dual derivation.

    """
    return context.derive_extent(attributes)


def closure_attrs(
    context: FormalContext, attributes: AbstractSet[str]
) -> FrozenSet[str]:
    """Return the closure of an attribute set.

    The closure is the intent of the extent of `attributes`. It is
    extensive, monotone and idempotent.

    """
    return context.closure_attributes(attributes)


def closure_objects(
    context: FormalContext, objects: AbstractSet[str]
) -> FrozenSet[str]:
    """Return the closure of an object set."""
    return context.closure_objects(objects)


def project_context(
    context: FormalContext, attributes: AbstractSet[str]
) -> FormalContext:
    """Return the context restricted to some attributes.

    See :meth:`cpslattice.FormalContext.project` for full
    documentation.

    """
    return context.project(attributes)
