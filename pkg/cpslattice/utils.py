"""Utility functions.

Functions
---------

- infer_layer
- max_objects
- check_capacity

Variables
---------

- DEFAULT_MAX_OBJECTS
- LAYERS

"""
import logging
import os
from typing import Optional

from .errors import CapacityError, InputError

__all__ = [
    "infer_layer",
    "max_objects",
    "check_capacity",
    "DEFAULT_MAX_OBJECTS",
    "LAYERS",
]

logger = logging.getLogger(__name__)

DEFAULT_MAX_OBJECTS = 25
MAX_OBJECTS_ENV = "CPS_LATTICE_MAX_OBJECTS"

LAYERS = ("physical", "cyber", "inclusive")


def infer_layer(attribute: str) -> Optional[str]:
    """Return the layer encoded in an attribute name, if any.

    Attributes named ``FI^<composite>`` are inclusive, names ending in
    ``^P`` are physical and names ending in ``^C`` are cyber. Any other
    name is untagged (None).

    """
    if attribute.startswith("FI^"):
        return "inclusive"
    if attribute.endswith("^P"):
        return "physical"
    if attribute.endswith("^C"):
        return "cyber"
    return None


def max_objects(override: int = None) -> int:
    """Return the size guard of the exponential enumerations.

    Parameters
    ----------
    override : int, optional
        Explicit limit. Takes precedence over the environment.

    Returns
    -------
    int
        `override` if given, else the value of the
        ``CPS_LATTICE_MAX_OBJECTS`` environment variable, else
        `DEFAULT_MAX_OBJECTS` (25).

    """
    if override is not None:
        return override
    value = os.environ.get(MAX_OBJECTS_ENV)
    if value is None:
        return DEFAULT_MAX_OBJECTS
    try:
        limit = int(value)
    except ValueError:
        raise InputError(
            f"`{MAX_OBJECTS_ENV}` must be a positive integer, not {value!r}."
        ) from None
    if limit < 1:
        raise InputError(
            f"`{MAX_OBJECTS_ENV}` must be a positive integer, not {value!r}."
        )
    if limit > DEFAULT_MAX_OBJECTS:
        logger.debug(
            "Size guard raised to %d (exponential beyond defaults).", limit
        )
    return limit


def check_capacity(size: int, what: str, limit: int, hint: str = ""):
    """Raise a CapacityError if `size` exceeds `limit`."""
    if size > limit:
        message = f"{what} is {size}, above the limit of {limit}."
        if hint:
            message += " " + hint
        raise CapacityError(message)
