"""Entry point for `python -m cpslattice`."""
import sys

from .cli import main

sys.exit(main())
