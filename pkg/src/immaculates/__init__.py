"""Exact arithmetic for the dual immaculate and row-strict dual immaculate
bases of the quasisymmetric / noncommutative symmetric dual pair."""

from .compositions import Composition, Partition, SubsetOfPrefix
from .elements import Element, TensorElem
from .polynomials import BiPoly, Poly
from .tableaux import PosetPath, Shape, Tableau

__all__ = [
    "Composition",
    "Partition",
    "SubsetOfPrefix",
    "Element",
    "TensorElem",
    "Poly",
    "BiPoly",
    "Shape",
    "Tableau",
    "PosetPath",
]

__version__ = "0.1.0"
