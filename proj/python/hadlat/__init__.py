"""Integer points of the Hadamard polytope and its dilates.

Exact counting and enumeration, plus certified lower bounds for larger
dilations.  All heavy lifting happens in the compiled extension.
"""

try:
    from ._hadlat import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _hadlat import *  # noqa: F401,F403  (build-tree layout)
