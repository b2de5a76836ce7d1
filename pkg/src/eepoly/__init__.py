"""Exact computation of the edge elimination polynomial and its relatives."""

from .polyring import MPoly, ExactDivisionError
from .multigraph import Multigraph
from .xi_core import (
    EdgeLabeling,
    EliminationPolicy,
    FixedPriorityPolicy,
    GeneralParams,
    MaxDegreePolicy,
    SeededPolicy,
    UnlabeledEdgeError,
    xi,
    xi_expansion,
    xi_general_eval,
    xi_lab,
    xi_lab_expansion,
)

__version__ = "0.1.0"

__all__ = [
    "MPoly",
    "ExactDivisionError",
    "Multigraph",
    "EdgeLabeling",
    "EliminationPolicy",
    "FixedPriorityPolicy",
    "GeneralParams",
    "MaxDegreePolicy",
    "SeededPolicy",
    "UnlabeledEdgeError",
    "xi",
    "xi_expansion",
    "xi_general_eval",
    "xi_lab",
    "xi_lab_expansion",
]
