"""Orbifold strand diagrams: invariants, region labels, quivers with
potential, boundary algebras and the realization certificate.

The heavy lifting happens in the compiled extension ``_orbidim``; this
package re-exports its API and adds a file-loading convenience.
"""

try:
    from ._orbidim import *  # noqa: F401,F403  (installed layout)
    from ._orbidim import Diagram, parse, serialize  # noqa: F401
except ImportError:  # in-tree build: extension on PYTHONPATH
    from _orbidim import *  # noqa: F401,F403
    from _orbidim import Diagram, parse, serialize  # noqa: F401

__version__ = "0.1.0"


def load(path):
    """Parse and structurally check a .osd file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())
