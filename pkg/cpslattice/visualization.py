"""Visualization tools.

Functions
---------

- plot_context

"""
from typing import TYPE_CHECKING, Sequence

import numpy as np
from matplotlib import pyplot as plt
from matplotlib.axes import Axes

if TYPE_CHECKING:
    from .context import FormalContext

__all__ = ["plot_context"]


def plot_context(
    context: "FormalContext",
    ax: Axes = None,
    preset: str = "full",
    cmap: str = "Blues",
    tick_loc: Sequence[str] = ("top", "left"),
    label: str = "both",
    layer_separators: bool = True,
    grid_color: str = "gray",
    grid_linestyle: str = "-",
    grid_linewidth: float = 0.5,
    **kwargs,
) -> Axes:
    """
    Plot a formal context as a cross table.

    Objects run along the y-axis and attributes along the x-axis. Filled
    cells mark incidence.

    Parameters
    ----------
    context : :class:`cpslattice.FormalContext`
        Context to plot.
    ax : :class:`matplotlib.axes.Axes`, optional
        Axes to plot the context on. A new figure is created if not
        given.
    preset : {'full', 'frame', 'plain'}, default: 'full'
        Preset theme. For 'full' preset, ticks, grid and labels are on.
        For 'frame' preset, ticks and grid are both off. For 'plain'
        preset, the x- and y-axis are both off.
    cmap : str or :class:`matplotlib.colors.Colormap`, default: 'Blues'
        Colormap. Will be passed to :meth:`matplotlib.axes.Axes.imshow`.
    tick_loc : sequence of {'bottom', 'top', 'left', 'right'}
        Tick locations. Defaults to `('top', 'left')`.
    label : {'x', 'y', 'both', 'off'}, default: 'both'
        Whether to add labels to x- and y-axes.
    layer_separators : bool, default: True
        Whether to draw a vertical line where the attribute layer
        changes.
    grid_color : str, default: 'gray'
        Grid color. Will be passed to :meth:`matplotlib.axes.Axes.grid`.
    grid_linestyle : str, default: '-'
        Grid line style.
    grid_linewidth : float, default: 0.5
        Grid line width.
    **kwargs
        Keyword arguments to be passed to
        :meth:`matplotlib.axes.Axes.imshow`.

    Returns
    -------
    :class:`matplotlib.axes.Axes`
        Axes the context was plotted on.

    """
    if ax is None:
        _, ax = plt.subplots()
    n_objects, n_attributes = context.incidence.shape
    ax.imshow(
        context.incidence.astype(np.uint8),
        cmap=cmap,
        aspect="equal",
        vmin=0,
        vmax=1,
        interpolation="none",
        **kwargs,
    )

    if preset == "full":
        ax.set_xticks(np.arange(n_attributes))
        ax.set_xticklabels(context.attributes, rotation=90)
        ax.set_yticks(np.arange(n_objects))
        ax.set_yticklabels(context.objects)
        ax.tick_params(
            bottom=("bottom" in tick_loc),
            top=("top" in tick_loc),
            left=("left" in tick_loc),
            right=("right" in tick_loc),
            labelbottom=("bottom" in tick_loc),
            labeltop=("top" in tick_loc),
            labelleft=("left" in tick_loc),
            labelright=("right" in tick_loc),
        )
        ax.set_xticks(np.arange(n_attributes + 1) - 0.5, minor=True)
        ax.set_yticks(np.arange(n_objects + 1) - 0.5, minor=True)
        ax.grid(
            which="minor",
            color=grid_color,
            linestyle=grid_linestyle,
            linewidth=grid_linewidth,
        )
        ax.tick_params(which="minor", length=0)
    elif preset == "frame":
        ax.tick_params(
            bottom=False,
            top=False,
            left=False,
            right=False,
            labelbottom=False,
            labeltop=False,
            labelleft=False,
            labelright=False,
        )
    elif preset == "plain":
        ax.axis("off")
    else:
        raise ValueError(
            f"`preset` must be one of 'full', 'frame' or 'plain', not {preset}"
        )

    if label not in ("x", "y", "both", "off"):
        raise ValueError(
            f"`label` must be one of 'x', 'y', 'both' or 'off', not {label}."
        )
    if label in ("x", "both"):
        ax.set_xlabel("attribute")
    if label in ("y", "both"):
        ax.set_ylabel("object")

    if layer_separators:
        layers = context.attribute_layers
        for idx in range(1, len(layers)):
            if layers[idx] != layers[idx - 1]:
                ax.axvline(idx - 0.5, color="black", linewidth=1.5)

    return ax
