import pytest

from cpslattice import (
    AtomicCps,
    Component,
    CompositeCps,
    CpsModel,
    FunctionEquivalence,
    ModelValidationError,
    atomic_function_profile,
    build_formal_context,
    canonical_functions,
    function_dependency_graph,
    inclusive_attributes,
)

from conftest import LAYERED_ATTRIBUTES, LAYERED_ROWS


def test_atomic_function_profile(layered_model):
    profiles = atomic_function_profile(
        layered_model.model, layered_model.equivalence
    )
    assert list(profiles) == ["CPS1", "CPS2", "CPS4", "CPS5", "CPS6", "CPS7"]
    assert profiles["CPS5"].physical == {"F1^P", "F2^P"}
    assert profiles["CPS5"].cyber == {"F2^C"}
    assert profiles["CPS4"].physical == {"F4^P"}
    assert profiles["CPS4"].cyber == {"F3^C", "F4^C"}


def test_unclassified_function_becomes_singleton():
    model = CpsModel(
        components=(
            Component("P1", "physical", ("i",), ("o",), ("raw_p",), "sensor"),
            Component("C1", "cyber", ("i",), ("o",), ("raw_c",)),
        ),
        atomics=(AtomicCps("CPS1", ("P1", "C1")),),
    )
    profiles = atomic_function_profile(model, FunctionEquivalence())
    assert profiles["CPS1"].functions == {"raw_p", "raw_c"}
    context = build_formal_context(model, FunctionEquivalence())
    assert context.attributes == ("raw_p", "raw_c")
    assert context.shape == (1, 2)
    assert context.incidence.all()


def test_inclusive_attributes(layered_model):
    included = inclusive_attributes(layered_model.model)
    assert included["CPS3"] == {"CPS1", "CPS2"}
    assert included["CPS8"] == {"CPS4", "CPS5", "CPS6", "CPS7"}
    assert included["CPS9"] == {"CPS1", "CPS2", "CPS4", "CPS5", "CPS6", "CPS7"}


def test_inclusive_attributes_single_member(layered_model):
    model = layered_model.model
    composite = CompositeCps("CPS10", ("CPS4",))
    model = CpsModel(
        components=model.components,
        atomics=model.atomics,
        composites=(composite,),
    )
    assert inclusive_attributes(model) == {"CPS10": {"CPS4"}}


def test_inclusive_attributes_cycle(layered_model):
    model = CpsModel(
        components=layered_model.model.components,
        atomics=layered_model.model.atomics,
        composites=(
            CompositeCps("A", ("CPS1", "B")),
            CompositeCps("B", ("A",)),
        ),
    )
    with pytest.raises(ModelValidationError, match="COMPOSITION_CYCLE"):
        inclusive_attributes(model)


def test_canonical_functions(layered_model):
    functions = canonical_functions(
        layered_model.model, layered_model.equivalence
    )
    assert [name for name, _ in functions] == LAYERED_ATTRIBUTES[:9]
    assert {layer for name, layer in functions if name.endswith("^C")} == {
        "cyber"
    }


def test_build_formal_context_layered_model(layered_model, layered_context):
    context = build_formal_context(
        layered_model.model, layered_model.equivalence
    )
    assert context.objects == tuple(LAYERED_ROWS)
    assert context.attributes == tuple(LAYERED_ATTRIBUTES)
    assert context == layered_context
    assert context.attribute_layers[-3:] == ("inclusive",) * 3


def test_build_formal_context_without_inclusive(layered_model):
    context = build_formal_context(
        layered_model.model, layered_model.equivalence, include_inclusive=False
    )
    assert context.attributes == tuple(LAYERED_ATTRIBUTES[:9])


def test_build_formal_context_production_line(
    production_line, production_context
):
    context = build_formal_context(
        production_line.model, production_line.equivalence, False
    )
    assert context == production_context
    assert set(context.attribute_layers) == {"physical"}


def test_composite_owned_components(layered_model):
    model = layered_model.model
    extra = (
        Component("P3", "physical", ("i",), ("o",), ("F_P2^2",), "sensor"),
        Component("C3", "cyber", ("i",), ("o",), ("F_C1^1",)),
    )
    composites = (
        CompositeCps("CPS3", ("CPS1", "CPS2"), own_components=("P3", "C3")),
    ) + model.composites[1:]
    model = CpsModel(
        components=model.components + extra,
        atomics=model.atomics,
        composites=composites,
        physical_links=model.physical_links,
        cyber_links=model.cyber_links,
    )
    context = build_formal_context(model, layered_model.equivalence)
    assert context.objects[-1] == "CPS3.core"
    assert context.row("CPS3.core") == {"F3^P", "F1^C", "FI^CPS3", "FI^CPS9"}
    assert context.column("F3^P") == {"CPS2", "CPS3.core"}


def test_invalid_model_is_rejected():
    model = CpsModel(
        components=(
            Component("P1", "physical", ("i",), ("o",), ("f",), "sensor"),
        ),
        atomics=(AtomicCps("CPS1", ("P1",)),),
    )
    with pytest.raises(ModelValidationError) as excinfo:
        build_formal_context(model, FunctionEquivalence())
    assert [d.code for d in excinfo.value.diagnostics] == ["CYBER_MISSING"]


def test_function_dependency_graph(layered_model):
    graph = function_dependency_graph(
        layered_model.model,
        layered_model.equivalence,
        {"CPS1", "CPS2"},
        ["F1^P", "F2^P", "F3^P"],
    )
    assert graph.nodes == ("F1^P", "F2^P", "F3^P")
    assert graph.edges == {("F1^P", "F2^P"), ("F1^P", "F3^P")}


def test_function_dependency_graph_ignores_outside_links(layered_model):
    graph = function_dependency_graph(
        layered_model.model,
        layered_model.equivalence,
        {"CPS2", "CPS7"},
        ["F1^P", "F2^P", "F3^P"],
    )
    assert graph.nodes == ("F1^P", "F2^P", "F3^P")
    assert not graph.edges


def test_function_dependency_graph_unknown_subsystem(layered_model):
    from cpslattice import InputError

    with pytest.raises(InputError, match="CPS3"):
        function_dependency_graph(
            layered_model.model, layered_model.equivalence, {"CPS3"}, ["F1^P"]
        )
