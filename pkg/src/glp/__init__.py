"""Graded Lie algebras from root systems with markers.

Subpackages and modules:

* ``exactspace``: exact rational vectors and bilinear forms with marker directions
* ``rootsys``: root systems, Weyl orbits, weight sets, classification
* ``gcm``: extended generalized Cartan matrices and the marker solver
* ``slicer`` and ``catalog``: degree slices and the construction catalog
* ``gla``: structure-constant engine for graded Lie algebras
* ``cli``: command-line front end
"""

from .errors import GLPError

__version__ = "0.1.0"

__all__ = ["GLPError", "__version__"]
