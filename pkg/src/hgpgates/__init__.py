"""Targeted logical Clifford circuits for hypergraph product codes."""

from .codes import CssCode, HgpCode, LogicalQubitLabel, QubitIndex, Sector, hgp, toric
from .circuit import Circuit, Gate, GateKind, LogicalGateSpec
from .logicals import LogicalBasis, logical_basis, l_matrix
from .pauli import SignedPauli

__all__ = [
    "Circuit",
    "CssCode",
    "Gate",
    "GateKind",
    "HgpCode",
    "LogicalBasis",
    "LogicalGateSpec",
    "LogicalQubitLabel",
    "QubitIndex",
    "Sector",
    "SignedPauli",
    "hgp",
    "l_matrix",
    "logical_basis",
    "toric",
]
