import matplotlib

matplotlib.use("Agg")

import pytest
from matplotlib import pyplot as plt

from cpslattice import plot_context


def test_plot_context(layered_context):
    ax = plot_context(layered_context)
    assert [t.get_text() for t in ax.get_yticklabels()] == list(
        layered_context.objects
    )
    # Separators between the physical, cyber and inclusive blocks.
    assert len(ax.lines) == 2
    plt.close("all")


def test_plot_context_on_given_axes(subsystems):
    _, ax = plt.subplots()
    assert plot_context(subsystems, ax=ax, preset="plain") is ax
    plt.close("all")


def test_plot_context_invalid_preset(subsystems):
    with pytest.raises(ValueError):
        plot_context(subsystems, preset="fancy")
    plt.close("all")


def test_context_plot_method(production_context):
    _, ax = plt.subplots()
    assert production_context.plot(ax, preset="frame", label="off") is ax
    assert ax.get_xlabel() == ""
    plt.close("all")
