"""Exact-arithmetic invariants of the semisimple extension of the Takiff
superalgebra of a simple Lie algebra: Borel classification, composition
multiplicities, blocks, Ext dimensions, Koszulity checks and Schur-Weyl
commutant dimensions."""

from .rootsys import build_root_datum
from .multiplicities import SuperWeight, super_weight

__all__ = ["build_root_datum", "SuperWeight", "super_weight"]
__version__ = "0.1.0"
