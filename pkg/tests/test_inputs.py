import json

import pytest

from cpslattice import InputError, load_cxt, load_model, parse_model, read_cxt


def layered_data(data_dir):
    return json.loads((data_dir / "figure5.json").read_text())


def test_load_model(layered_model):
    model = layered_model.model
    assert len(model.components) == 12
    assert [a.id for a in model.atomics] == [
        "CPS1",
        "CPS2",
        "CPS4",
        "CPS5",
        "CPS6",
        "CPS7",
    ]
    assert model.composite_map()["CPS9"].logical_members == ("CPS3", "CPS8")
    assert ("P1", "P2") in model.physical_links
    assert len(layered_model.equivalence.classes) == 9
    assert layered_model.query is None


def test_load_model_with_query(production_line):
    query = production_line.query
    assert query.nodes == ("FRa", "FW1", "FP2")
    assert query.edges == frozenset()


@pytest.mark.parametrize("text", ["", "  \n"])
def test_empty_document(text):
    with pytest.raises(InputError) as excinfo:
        parse_model(text)
    assert excinfo.value.path == ""


def test_syntax_error():
    with pytest.raises(InputError) as excinfo:
        parse_model('{\n  "format": \n')
    assert excinfo.value.line == 3
    assert excinfo.value.column is not None


def test_missing_key(data_dir):
    data = layered_data(data_dir)
    del data["atomics"]
    with pytest.raises(InputError, match="atomics") as excinfo:
        parse_model(json.dumps(data))
    assert excinfo.value.path == ""


def test_wrong_type_reports_pointer(data_dir):
    data = layered_data(data_dir)
    data["components"][1]["inputs"] = "signal"
    with pytest.raises(InputError) as excinfo:
        parse_model(json.dumps(data))
    assert excinfo.value.path == "/components/1/inputs"


def test_unknown_key(data_dir):
    data = layered_data(data_dir)
    data["extra"] = 1
    with pytest.raises(InputError, match="extra"):
        parse_model(json.dumps(data))


def test_wrong_format_version(data_dir):
    data = layered_data(data_dir)
    data["format"] = "cps-lattice/0"
    with pytest.raises(InputError) as excinfo:
        parse_model(json.dumps(data).encode("utf-8"))
    assert excinfo.value.path == "/format"


def test_invalid_utf8():
    with pytest.raises(InputError, match="UTF-8"):
        parse_model(b"\xff\xfe")


def test_query_with_undeclared_node(data_dir):
    data = layered_data(data_dir)
    data["query"] = {"functions": ["F1^P"], "edges": [["F1^P", "F2^P"]]}
    with pytest.raises(InputError, match="undeclared"):
        parse_model(json.dumps(data))


def test_load_model_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_model(tmp_path / "missing.json")


def test_read_cxt(subsystems):
    assert subsystems.shape == (8, 6)
    assert subsystems.objects[0] == "SSF1"
    assert subsystems.attributes == ("F1", "F2", "F3", "F4", "F5", "F6")
    assert subsystems.row("SSF5") == {"F4", "F5", "F6"}


def test_read_cxt_crlf(data_dir, subsystems):
    text = (data_dir / "subsystems.cxt").read_text().replace("\n", "\r\n")
    assert read_cxt(text.encode("utf-8")) == subsystems


def test_read_cxt_empty():
    context = read_cxt("B\n\n0\n0\n\n")
    assert context.shape == (0, 0)


def test_read_cxt_wrong_arity(data_dir):
    text = (data_dir / "subsystems.cxt").read_text()
    text = text.replace(".XX...\n", ".XX..\n", 1)
    with pytest.raises(InputError, match="SSF2") as excinfo:
        read_cxt(text)
    assert excinfo.value.line == 21


def test_read_cxt_bad_character(data_dir):
    text = (data_dir / "subsystems.cxt").read_text()
    text = text.replace("XX....", "Xo....")
    with pytest.raises(InputError, match="SSF1"):
        read_cxt(text)


@pytest.mark.parametrize(
    "text",
    [
        "C\n\n0\n0\n",
        "B\n\nmany\n0\n",
        "B\n\n1\n1\n\no\n",
        "B\n\n1\n1\n\no\na\nX\nX\n",
        "B\n\n2\n1\n\no\no\na\nX\nX\n",
    ],
)
def test_read_cxt_malformed(text):
    with pytest.raises(InputError):
        read_cxt(text)


def test_load_cxt(data_dir, production_context):
    path = str(data_dir / "production_line.cxt")
    assert load_cxt(path) == production_context
