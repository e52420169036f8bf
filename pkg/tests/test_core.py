import pytest

from cpslattice import (
    InputError,
    closure_attrs,
    closure_objects,
    derive_extent,
    derive_intent,
    project_context,
)


def test_derive_intent(subsystems):
    assert derive_intent(subsystems, {"SSF5"}) == {"F4", "F5", "F6"}
    assert derive_intent(subsystems, set()) == set(subsystems.attributes)


def test_derive_extent(subsystems):
    assert derive_extent(subsystems, {"F4", "F6"}) == {"SSF5", "SSF8"}


def test_closure_attrs(subsystems):
    assert closure_attrs(subsystems, {"F1"}) == {"F1", "F2"}
    assert closure_attrs(subsystems, set()) == set()


def test_closure_objects(subsystems):
    assert closure_objects(subsystems, {"SSF2"}) == {"SSF2", "SSF6", "SSF7"}


def test_project_context(layered_context):
    cyber = project_context(
        layered_context, {"F1^C", "F2^C", "F3^C", "F4^C", "F5^C"}
    )
    assert cyber.derive_intent({"CPS2"}) == cyber.derive_intent({"CPS6"})


def test_unknown_attribute(subsystems):
    with pytest.raises(InputError):
        closure_attrs(subsystems, {"F0"})
