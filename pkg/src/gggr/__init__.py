"""Exact combinatorial invariants of reductive groups.

Subpackages cover root-datum lattice algebra and prime conditions
(`rootdata`), Weyl groups and their exact character theory (`weyl`),
nilpotent orbit combinatorics (`orbits`), Green-function tables
(`green`), two-sided cells and families (`cells`), and the
decomposition of generalised Gelfand-Graev characters (`gggr`), with a
batch CLI in `cli`.
"""

__version__ = "0.1.0"
