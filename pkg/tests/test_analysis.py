import pytest

from cpslattice import (
    CapacityError,
    ConceptCombination,
    FormalContext,
    FunctionGraph,
    InputError,
    build_lattice,
    concept_combinations,
    query_isomorphism_check,
    redundancy_report,
    removal_impact,
    resiliency_gaps,
    satisfy_query,
)

REQUEST = {"F1", "F2", "F3", "F5"}


def test_redundancy_report_production_line(production_context):
    report = redundancy_report(production_context)
    assert report.multiplicity == {
        "FC": 2,
        "FRa": 2,
        "FRb": 2,
        "FW1": 1,
        "FW2": 1,
        "FP1": 1,
        "FP2": 1,
        "FT": 2,
    }
    assert list(report.multiplicity) == list(production_context.attributes)
    assert report.gaps == ("FW1", "FW2", "FP1", "FP2")
    assert report.unavailable == ()
    assert report.single_points_of_failure == report.gaps
    assert report.duplicate_groups == (("CPS1", "CPS2"),)


def test_redundancy_report_layered(layered_context):
    report = redundancy_report(layered_context)
    assert "FI^CPS3" not in report.multiplicity
    assert report.gaps == ("F3^P", "F4^C", "F5^C")
    assert report.duplicate_groups == ()


def test_redundancy_report_by_layer(layered_context):
    cyber = redundancy_report(layered_context, layer="cyber")
    assert cyber.layer == "cyber"
    assert list(cyber.multiplicity) == ["F1^C", "F2^C", "F3^C", "F4^C", "F5^C"]
    assert cyber.duplicate_groups == (("CPS2", "CPS6"),)
    physical = redundancy_report(layered_context, layer="physical")
    assert physical.duplicate_groups == (("CPS1", "CPS7"), ("CPS4", "CPS6"))
    assert physical.gaps == ("F3^P",)


def test_redundancy_report_with_inclusive(layered_context):
    report = redundancy_report(layered_context, include_inclusive=True)
    assert report.multiplicity["FI^CPS9"] == 6
    assert report.multiplicity["FI^CPS3"] == 2


def test_redundancy_report_unavailable():
    context = FormalContext(
        objects=["a", "b"],
        attributes=["x", "y", "z"],
        incidence=[[1, 0, 1], [1, 0, 0]],
    )
    report = redundancy_report(context)
    assert report.gaps == ("y", "z")
    assert report.unavailable == ("y",)
    assert report.single_points_of_failure == ("z",)


def test_no_gaps_when_every_function_is_duplicated():
    context = FormalContext(
        objects=["a", "b", "c"],
        attributes=["x", "y"],
        incidence=[[1, 1], [1, 0], [0, 1]],
    )
    report = redundancy_report(context)
    assert report.gaps == ()
    assert report.duplicate_groups == ()


def test_duplicate_groups_without_attributes():
    context = FormalContext(objects=["a", "b"], attributes=[])
    assert redundancy_report(context).duplicate_groups == (("a", "b"),)


def test_resiliency_gaps(subsystems, layered_context, production_context):
    assert resiliency_gaps(layered_context) == {"F3^P", "F4^C", "F5^C"}
    assert resiliency_gaps(production_context) == {"FW1", "FW2", "FP1", "FP2"}
    assert resiliency_gaps(subsystems) == set()


def test_removal_impact(layered_context):
    assert removal_impact(layered_context, {"CPS2"}) == {"F3^P"}
    assert removal_impact(layered_context, {"CPS7"}) == {"F5^C"}
    assert removal_impact(layered_context, set()) == set()
    impact = removal_impact(layered_context, {"CPS1", "CPS7"})
    assert impact == {"F1^C", "F5^C"}


def test_removal_impact_unknown_object(layered_context):
    with pytest.raises(InputError, match="CPS3"):
        removal_impact(layered_context, {"CPS3"})


def test_satisfy_query_subsystems(subsystems):
    result = satisfy_query(subsystems, REQUEST)
    assert result.satisfiable
    assert result.requested == ("F1", "F2", "F3", "F5")
    assert [sorted(cover) for cover in result.minimal_covers] == [
        ["SSF4", "SSF7"],
        ["SSF5", "SSF7"],
        ["SSF1", "SSF2", "SSF4"],
        ["SSF1", "SSF2", "SSF5"],
        ["SSF1", "SSF3", "SSF4"],
        ["SSF1", "SSF3", "SSF5"],
        ["SSF1", "SSF4", "SSF6"],
        ["SSF1", "SSF5", "SSF6"],
    ]
    assert result.concept_combinations == ()


def test_satisfy_query_needs_several_subsystems(subsystems):
    result = satisfy_query(subsystems, set(subsystems.attributes))
    assert result.satisfiable
    assert min(len(cover) for cover in result.minimal_covers) >= 2
    for cover in result.minimal_covers:
        offered = set().union(*(subsystems.row(obj) for obj in cover))
        assert offered == set(subsystems.attributes)


def test_satisfy_query_empty_request(subsystems):
    result = satisfy_query(subsystems, set())
    assert result.minimal_covers == (frozenset(),)
    assert result.satisfiable


def test_satisfy_query_unsatisfiable():
    context = FormalContext(
        objects=["a", "b"], attributes=["x", "y"], incidence=[[1, 0], [1, 0]]
    )
    result = satisfy_query(context, {"x", "y"})
    assert not result.satisfiable
    assert result.minimal_covers == ()


def test_satisfy_query_errors(subsystems):
    with pytest.raises(InputError, match="F9"):
        satisfy_query(subsystems, {"F1", "F9"})
    with pytest.raises(CapacityError):
        satisfy_query(subsystems, {"F1"}, max_size=4)


def test_satisfy_query_with_lattice(subsystems):
    lattice = build_lattice(subsystems)
    result = satisfy_query(subsystems, REQUEST, lattice)
    assert result.concept_combinations == tuple(
        concept_combinations(lattice, REQUEST)
    )


def test_concept_combinations_subsystems(subsystems):
    lattice = build_lattice(subsystems)
    c = {
        name: lattice.index_of(extent)
        for name, extent in [
            ("C1", {"SSF1", "SSF7"}),
            ("C2", {"SSF2", "SSF6", "SSF7"}),
            ("C3", {"SSF3", "SSF6"}),
            ("C4", {"SSF4", "SSF5"}),
            ("C7", {"SSF7"}),
        ]
    }
    found = {
        combination.concepts
        for combination in concept_combinations(lattice, REQUEST)
    }
    assert tuple(sorted((c["C7"], c["C4"]))) in found
    assert tuple(sorted((c["C1"], c["C2"], c["C4"]))) in found
    assert tuple(sorted((c["C1"], c["C3"], c["C4"]))) in found
    assert lattice.infimum_index not in {i for combo in found for i in combo}


def test_concept_combinations_are_minimal(subsystems):
    lattice = build_lattice(subsystems)
    combinations = concept_combinations(lattice, REQUEST)
    for combination in combinations:
        intents = [lattice[idx].intent for idx in combination.concepts]
        assert REQUEST <= set().union(*intents)
        for skipped in range(len(intents)):
            rest = intents[:skipped] + intents[skipped + 1 :]
            assert not REQUEST <= set().union(*rest)


def test_concept_combinations_single_function(subsystems):
    lattice = build_lattice(subsystems)
    for attribute in subsystems.attributes:
        expected = [
            (idx,)
            for idx, concept in enumerate(lattice)
            if attribute in concept.intent and idx != lattice.infimum_index
        ]
        combinations = concept_combinations(lattice, {attribute})
        found = [c.concepts for c in combinations]
        assert found == expected


def test_concept_combinations_empty_request(subsystems):
    lattice = build_lattice(subsystems)
    assert concept_combinations(lattice, set()) == [ConceptCombination((), ())]


def test_subsystem_choices(subsystems):
    lattice = build_lattice(subsystems)
    c4 = lattice.index_of({"SSF4", "SSF5"})
    c7 = lattice.index_of({"SSF7"})
    combination = ConceptCombination(
        tuple(sorted((c4, c7))),
        tuple(lattice[idx].extent for idx in sorted((c4, c7))),
    )
    assert combination.extent_union == {"SSF4", "SSF5", "SSF7"}
    assert combination.subsystem_choices() == [
        {"SSF4", "SSF7"},
        {"SSF5", "SSF7"},
    ]


def labeled(nodes, edges=(), labels=None):
    return FunctionGraph(tuple(nodes), frozenset(edges), labels or {})


def test_isomorphism_single_node():
    query = labeled(["F2"])
    candidate = labeled(["SSF6"], labels={"SSF6": {"F2", "F3", "F4"}})
    result = query_isomorphism_check(candidate, query)
    assert result
    assert result.mapping == {"F2": "SSF6"}


def test_isomorphism_reversed_edge():
    labels = {"a": {"F1"}, "b": {"F2"}}
    query = labeled(["a", "b"], [("a", "b")], labels)
    candidate = labeled(["a", "b"], [("b", "a")], labels)
    assert not query_isomorphism_check(candidate, query)


def test_isomorphism_chain():
    query = labeled(["F1", "F2", "F3"], [("F1", "F2"), ("F2", "F3")])
    candidate = labeled(
        ["x", "y", "z"],
        [("z", "x"), ("x", "y")],
        {"x": {"F2"}, "y": {"F3"}, "z": {"F1"}},
    )
    result = query_isomorphism_check(candidate, query)
    assert result.is_isomorphic
    assert result.mapping == {"F1": "z", "F2": "x", "F3": "y"}


def test_isomorphism_requires_labels():
    query = labeled(["F1", "F2"], [("F1", "F2")])
    candidate = labeled(
        ["x", "y"], [("x", "y")], {"x": {"F1"}, "y": {"F3"}}
    )
    assert not query_isomorphism_check(candidate, query)


def test_isomorphism_size_mismatch():
    assert not query_isomorphism_check(labeled(["F1", "F2"]), labeled(["F1"]))


def test_isomorphism_guard():
    big = labeled([f"n{i}" for i in range(11)])
    with pytest.raises(CapacityError):
        query_isomorphism_check(big, big)
    assert query_isomorphism_check(big, big, max_nodes=11)


def test_function_graph_validation():
    with pytest.raises(InputError, match="undeclared"):
        labeled(["a"], [("a", "b")])
    with pytest.raises(InputError, match="Self-loop"):
        labeled(["a"], [("a", "a")])
    with pytest.raises(InputError, match="unique"):
        labeled(["a", "a"])
