"""A Python library for formal concept analysis of cyber-physical systems.

Cpslattice models cyber-physical systems as physical and cyber components
grouped into atomic and composite systems, compiles them into formal
contexts and builds their concept lattices. The lattices reveal which
subsystems duplicate each other, which functions have a single provider
and which subsystem combinations satisfy a function request.

Features
--------

- Describe and validate CPS models against the meta-model
- Compile models into layer-tagged formal contexts
- Build concept lattices with their Hasse diagrams
- Find redundancy, resiliency gaps and minimal subsystem covers
- Read and write Burmeister contexts, DOT diagrams and JSON reports

"""
from . import (
    analysis,
    compile,
    context,
    core,
    errors,
    inputs,
    lattice,
    model,
    outputs,
    utils,
    visualization,
)
from .analysis import *
from .compile import *
from .context import *
from .core import *
from .errors import *
from .inputs import *
from .lattice import *
from .model import *
from .outputs import *
from .utils import *
from .version import __version__
from .visualization import *

__all__ = ["__version__"]
__all__.extend(analysis.__all__)
__all__.extend(compile.__all__)
__all__.extend(context.__all__)
__all__.extend(core.__all__)
__all__.extend(errors.__all__)
__all__.extend(inputs.__all__)
__all__.extend(lattice.__all__)
__all__.extend(model.__all__)
__all__.extend(outputs.__all__)
__all__.extend(utils.__all__)
__all__.extend(visualization.__all__)
