"""Non-commutative topologies on quiver representations over small prime fields."""

from .errors import (
    BudgetExceeded,
    CycleError,
    InvalidCover,
    NCTopError,
    NonSplitFactor,
    NotEmbedding,
    NotIdempotent,
    NotInvariant,
    UnsupportedShape,
)
from .opens import Flavor, LatticeElement, Letter, Word, equiv, leq, member, vee, wedge, word
from .quiver import FIXTURES, Quiver, build_quiver, simples
from .rep import Representation, direct_sum, enumerate_universe, jh_sequences, representation

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "CycleError", "InvalidCover", "NCTopError", "NonSplitFactor",
    "NotEmbedding", "NotIdempotent", "NotInvariant", "UnsupportedShape",
    "Flavor", "LatticeElement", "Letter", "Word", "equiv", "leq", "member", "vee", "wedge", "word",
    "FIXTURES", "Quiver", "build_quiver", "simples",
    "Representation", "direct_sum", "enumerate_universe", "jh_sequences", "representation",
]
