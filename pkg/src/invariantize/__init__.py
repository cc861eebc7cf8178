"""Construct symmetry-invariant large substructures at desk scale.

The core engine (``engine``) works over any ``lattice.LatticeInstance``;
``graphs``, ``groups`` and ``sets`` instantiate it for edge sets of finite
graphs, normal subgroups of finite groups, and finite rational point/relation
sets; ``oracle`` re-verifies everything by independent brute force; ``cli``
exposes the lot as subcommands.
"""

__version__ = "0.1.0"
