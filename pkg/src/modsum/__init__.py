"""Modular sumset labelings of finite graphs over Z_n."""

from ._kernels import BACKEND
from .errors import (
    BudgetExceeded,
    EmptyOperand,
    IncompatibleModuli,
    InvalidInput,
    InvalidLabeling,
    ModsumError,
    ParseError,
)
from .graph import Graph, covering_number, enumerate_graphs, generate_family, independence_number, is_bipartite
from .labeling import ClassificationReport, Labeling, classify, is_indexer, is_injective_labeling
from .search import Budget, Kind, MinResult, PropertySpec, SearchOutcome, Status, exists_labeling, min_modulus
from .zn import ZnSet, check_bounds, make_set, modular_difference_set, paper_difference_set, sumset

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Budget",
    "BudgetExceeded",
    "ClassificationReport",
    "EmptyOperand",
    "Graph",
    "IncompatibleModuli",
    "InvalidInput",
    "InvalidLabeling",
    "Kind",
    "Labeling",
    "MinResult",
    "ModsumError",
    "ParseError",
    "PropertySpec",
    "SearchOutcome",
    "Status",
    "ZnSet",
    "check_bounds",
    "classify",
    "covering_number",
    "enumerate_graphs",
    "exists_labeling",
    "generate_family",
    "independence_number",
    "is_bipartite",
    "is_indexer",
    "is_injective_labeling",
    "make_set",
    "min_modulus",
    "modular_difference_set",
    "paper_difference_set",
    "sumset",
]
