"""Class for formal contexts.

Classes
-------

- FormalContext

"""
from typing import (
    AbstractSet,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
)

import numpy as np
from matplotlib.axes import Axes
from numpy import ndarray

from .errors import InputError
from .utils import LAYERS, infer_layer
from .visualization import plot_context

__all__ = ["FormalContext"]


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _to_masks(matrix: ndarray) -> List[int]:
    masks = []
    for line in matrix:
        mask = 0
        for idx in np.flatnonzero(line):
            mask |= 1 << int(idx)
        masks.append(mask)
    return masks


class FormalContext:
    """A formal context, i.e. objects, attributes and their incidence.

    Attributes
    ----------
    objects : tuple of str
        Object identifiers, unique and non-empty.
    attributes : tuple of str
        Attribute identifiers, unique and non-empty.
    incidence : ndarray, dtype=bool, shape=(len(objects), len(attributes))
        Incidence matrix. Entry `(i, j)` is True if object `i` has
        attribute `j`. Cast to bool and made read-only.
    attribute_layers : tuple of {'physical', 'cyber', 'inclusive', None}
        Layer tag of each attribute. Inferred from the attribute names
        if not given (see :func:`cpslattice.infer_layer`).

    Notes
    -----
    Empty object or attribute lists are legal. Duplicate rows and
    columns are kept as they are.

    Two contexts compare equal when their objects, attributes and
    incidence are equal. Layer tags are annotations and do not take
    part in the comparison.

    """

    def __init__(
        self,
        objects: Sequence[str] = None,
        attributes: Sequence[str] = None,
        incidence=None,
        attribute_layers: Sequence[Optional[str]] = None,
    ):
        self.objects = tuple(objects) if objects is not None else ()
        self.attributes = (
            tuple(attributes) if attributes is not None else ()
        )
        shape = (len(self.objects), len(self.attributes))
        if incidence is None:
            matrix = np.zeros(shape, bool)
        else:
            matrix = np.array(incidence, dtype=bool)
            if matrix.size == 0:
                matrix = matrix.reshape(shape)
        matrix.setflags(write=False)
        self.incidence = matrix
        if attribute_layers is None:
            self.attribute_layers = tuple(
                infer_layer(attribute) for attribute in self.attributes
            )
        else:
            self.attribute_layers = tuple(attribute_layers)
        self.validate()

        self._object_index: Dict[str, int] = {
            obj: idx for idx, obj in enumerate(self.objects)
        }
        self._attribute_index: Dict[str, int] = {
            attr: idx for idx, attr in enumerate(self.attributes)
        }
        self._rows = _to_masks(self.incidence)
        self._columns = _to_masks(self.incidence.T)
        self._all_objects = (1 << len(self.objects)) - 1
        self._all_attributes = (1 << len(self.attributes)) - 1

    def __repr__(self) -> str:
        to_join = [
            f"objects={repr(self.objects)}",
            f"attributes={repr(self.attributes)}",
            f"incidence=array(shape={self.incidence.shape}, "
            f"dtype={self.incidence.dtype})",
        ]
        return f"FormalContext({', '.join(to_join)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.attributes == other.attributes
            and np.array_equal(self.incidence, other.incidence)
        )

    __hash__ = None  # type: ignore

    @property
    def shape(self):
        """Shape of the incidence matrix."""
        return self.incidence.shape

    def _validate_names(self, attr):
        names = getattr(self, attr)
        for name in names:
            if not isinstance(name, str):
                raise TypeError(
                    f"`{attr}` must contain only strings, not {type(name)}."
                )
            if not name:
                raise ValueError(f"`{attr}` must not contain empty names.")
        if len(set(names)) != len(names):
            seen = set()
            for name in names:
                if name in seen:
                    raise ValueError(
                        f"`{attr}` must be unique, but {name!r} repeats."
                    )
                seen.add(name)

    def validate(self):
        """Raise an error if the context is malformed.

        Returns
        -------
        Object itself.

        """
        self._validate_names("objects")
        self._validate_names("attributes")
        if self.incidence.ndim != 2:
            raise ValueError("`incidence` must have exactly two dimensions.")
        expected = (len(self.objects), len(self.attributes))
        if self.incidence.shape != expected:
            raise ValueError(
                f"`incidence` must have shape {expected}, not "
                f"{self.incidence.shape}."
            )
        if len(self.attribute_layers) != len(self.attributes):
            raise ValueError(
                "`attribute_layers` must have one entry per attribute."
            )
        for layer in self.attribute_layers:
            if layer is not None and layer not in LAYERS:
                raise ValueError(
                    f"Unknown layer {layer!r}; expect one of {LAYERS}."
                )
        return self

    def is_valid(self) -> bool:
        """Return True if the context is well formed."""
        try:
            self.validate()
        except (TypeError, ValueError):
            return False
        return True

    def plot(self, ax: Axes = None, **kwargs) -> Axes:
        """Plot the context as a cross table.

        Refer to :func:`cpslattice.plot_context` for full documentation.

        """
        return plot_context(self, ax, **kwargs)

    # Bitmask plumbing shared with the lattice and analysis modules

    def _object_mask(self, objects: Iterable[str]) -> int:
        mask = 0
        for obj in objects:
            try:
                mask |= 1 << self._object_index[obj]
            except KeyError:
                raise InputError(f"Unknown object {obj!r}.") from None
        return mask

    def _attribute_mask(self, attributes: Iterable[str]) -> int:
        mask = 0
        for attribute in attributes:
            try:
                mask |= 1 << self._attribute_index[attribute]
            except KeyError:
                raise InputError(f"Unknown attribute {attribute!r}.") from None
        return mask

    def _objects_of(self, mask: int) -> FrozenSet[str]:
        return frozenset(self.objects[idx] for idx in _iter_bits(mask))

    def _attributes_of(self, mask: int) -> FrozenSet[str]:
        return frozenset(self.attributes[idx] for idx in _iter_bits(mask))

    def _intent_mask(self, extent: int) -> int:
        intent = self._all_attributes
        for idx in _iter_bits(extent):
            intent &= self._rows[idx]
            if not intent:
                break
        return intent

    def _extent_mask(self, intent: int) -> int:
        extent = self._all_objects
        for idx in _iter_bits(intent):
            extent &= self._columns[idx]
            if not extent:
                break
        return extent

    def derive_intent(self, objects: AbstractSet[str]) -> FrozenSet[str]:
        """Return the attributes shared by all the given objects.

        The derivation of the empty set is the full attribute set.

        Raises
        ------
        InputError
            If an object is not in the context.

        """
        return self._attributes_of(
            self._intent_mask(self._object_mask(objects))
        )

    def derive_extent(self, attributes: AbstractSet[str]) -> FrozenSet[str]:
        """Return the objects having all the given attributes.

        The derivation of the empty set is the full object set.

        Raises
        ------
        InputError
            If an attribute is not in the context.

        """
        return self._objects_of(
            self._extent_mask(self._attribute_mask(attributes))
        )

    def closure_attributes(
        self, attributes: AbstractSet[str]
    ) -> FrozenSet[str]:
        """Return the closure of an attribute set (its double prime)."""
        extent = self._extent_mask(self._attribute_mask(attributes))
        return self._attributes_of(self._intent_mask(extent))

    def closure_objects(self, objects: AbstractSet[str]) -> FrozenSet[str]:
        """Return the closure of an object set (its double prime)."""
        intent = self._intent_mask(self._object_mask(objects))
        return self._objects_of(self._extent_mask(intent))

    def object_index(self, obj: str) -> int:
        """Return the position of an object."""
        try:
            return self._object_index[obj]
        except KeyError:
            raise InputError(f"Unknown object {obj!r}.") from None

    def attribute_index(self, attribute: str) -> int:
        """Return the position of an attribute."""
        try:
            return self._attribute_index[attribute]
        except KeyError:
            raise InputError(f"Unknown attribute {attribute!r}.") from None

    def row(self, obj: str) -> FrozenSet[str]:
        """Return the attributes of an object."""
        return self._attributes_of(self._rows[self.object_index(obj)])

    def column(self, attribute: str) -> FrozenSet[str]:
        """Return the objects having an attribute."""
        return self._objects_of(
            self._columns[self.attribute_index(attribute)]
        )

    def attributes_in_layer(self, *layers: Optional[str]) -> List[str]:
        """Return the attributes tagged with any of the given layers.

        Attributes keep their context order.

        """
        return [
            attribute
            for attribute, layer in zip(
                self.attributes, self.attribute_layers
            )
            if layer in layers
        ]

    def density(self) -> float:
        """Return the fraction of true incidence entries.

        Return 0 for a context without objects or attributes.

        """
        if not self.incidence.size:
            return 0.0
        return float(np.count_nonzero(self.incidence)) / self.incidence.size

    def project(self, attributes: AbstractSet[str]) -> "FormalContext":
        """Return the context restricted to some attributes.

        Objects are kept. Attributes keep their original order and
        layer tags.

        Parameters
        ----------
        attributes : set of str
            Attributes to keep.

        Raises
        ------
        InputError
            If an attribute is not in the context.

        """
        mask = self._attribute_mask(attributes)
        kept = [idx for idx in range(len(self.attributes)) if mask >> idx & 1]
        return FormalContext(
            objects=self.objects,
            attributes=[self.attributes[idx] for idx in kept],
            incidence=self.incidence[:, kept],
            attribute_layers=[self.attribute_layers[idx] for idx in kept],
        )

    def transpose(self) -> "FormalContext":
        """Return the dual context, swapping objects and attributes."""
        return FormalContext(
            objects=self.attributes,
            attributes=self.objects,
            incidence=self.incidence.T,
            attribute_layers=[None] * len(self.objects),
        )

    def copy(self) -> "FormalContext":
        """Return a copy of the context.

        Notes
        -----
        The incidence array is copied using :func:`numpy.copy`.

        """
        return FormalContext(
            objects=self.objects,
            attributes=self.attributes,
            incidence=self.incidence.copy(),
            attribute_layers=self.attribute_layers,
        )
