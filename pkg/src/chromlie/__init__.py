"""Root multiplicities of free partially commutative Lie algebras and
chromatic symmetric functions of graphs, in exact arithmetic."""

from .errors import BoundTooSmall, BudgetExceeded, GraphParseError, IntegralityError
from .graph import Graph, parse_graph
from .rootmult import MultTable, mult_table
from .series import QSeries
from .symfunc import NVarPoly, PowerSumExpr

__version__ = "0.1.0"

__all__ = ["BoundTooSmall", "BudgetExceeded", "GraphParseError", "IntegralityError", "Graph",
           "parse_graph", "MultTable", "mult_table", "QSeries", "NVarPoly", "PowerSumExpr"]
