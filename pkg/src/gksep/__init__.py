"""Graphs whose minimal separators are unions of k cliques."""
from .errors import BudgetExhausted, CapExceeded, GkSepError, Indeterminate, NotInClassError
from .graph import CutPartition, Graph
from .membership import MembershipVerdict, gk_membership, separator_profile

__all__ = [
    "BudgetExhausted",
    "CapExceeded",
    "CutPartition",
    "GkSepError",
    "Graph",
    "Indeterminate",
    "MembershipVerdict",
    "NotInClassError",
    "gk_membership",
    "separator_profile",
]
__version__ = "0.1.0"
