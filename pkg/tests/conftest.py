"""Shared fixtures."""
from pathlib import Path

import pytest

from cpslattice import (
    FormalContext,
    build_formal_context,
    load_cxt,
    load_model,
)

DATA_DIR = Path(__file__).parent / "data"

LAYERED_ATTRIBUTES = [
    "F1^P",
    "F2^P",
    "F3^P",
    "F4^P",
    "F1^C",
    "F2^C",
    "F3^C",
    "F4^C",
    "F5^C",
    "FI^CPS3",
    "FI^CPS8",
    "FI^CPS9",
]

LAYERED_ROWS = {
    "CPS1": "100010000101",
    "CPS2": "011001100101",
    "CPS4": "000100110011",
    "CPS5": "110001000011",
    "CPS6": "000101100011",
    "CPS7": "100010001011",
}


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def small_context():
    rows = ["10100", "01010", "00101", "11100", "00100", "00011", "01100"]
    rows.append("10110")
    return FormalContext(
        objects=[f"O{i}" for i in range(1, 9)],
        attributes=[f"A{i}" for i in range(1, 6)],
        incidence=[[char == "1" for char in row] for row in rows],
    )


@pytest.fixture
def subsystems():
    return load_cxt(DATA_DIR / "subsystems.cxt")


@pytest.fixture
def production_context():
    return load_cxt(DATA_DIR / "production_line.cxt")


@pytest.fixture
def layered_context():
    return FormalContext(
        objects=list(LAYERED_ROWS),
        attributes=LAYERED_ATTRIBUTES,
        incidence=[
            [char == "1" for char in row] for row in LAYERED_ROWS.values()
        ],
    )


@pytest.fixture
def layered_model():
    return load_model(DATA_DIR / "figure5.json")


@pytest.fixture
def layered_compiled(layered_model):
    return build_formal_context(layered_model.model, layered_model.equivalence)


@pytest.fixture
def production_line():
    return load_model(DATA_DIR / "production_line.json")
