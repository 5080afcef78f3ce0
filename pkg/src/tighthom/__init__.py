"""Tight-cycle homomorphism avoidance in uniform hypergraphs.

Submodules:

- ``permgroup``: slot permutations, subgroup conjugacy classes, coset colors
- ``hypergraph``: the hypergraph container and the generator zoo
- ``tightconn``: tight connectivity, closed-walk search, hom-freeness
- ``coloring``: accordant edge colorings, triple colorings, link colorings
- ``census``: triangle censuses of 2-colorings and the density optimizer
- ``extremal``: exhaustive search, pruning, and walk-building routines
- ``cli``: the ``tighthom`` command line
"""

__version__ = "0.1.0"
