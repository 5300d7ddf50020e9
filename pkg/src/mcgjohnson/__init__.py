"""Johnson-type invariants of mapping classes that fix a Lagrangian, computed on free-group automorphisms.

Modules, bottom up: ``lattice`` (integer linear algebra), ``words`` (reduced
free-group words), ``magnus`` (truncated Magnus expansions), ``lie`` (Lyndon
bases of the free Lie ring), ``exterior`` (third exterior powers and the maps
between them), ``mcg`` (endomorphisms and their Johnson values), ``braid``
(framed pure braids and their images), ``catalog`` and ``suites`` (concrete
samples and the verification suites), ``cli`` (command-line front end).
"""
from __future__ import annotations

__version__ = "0.1.0"
