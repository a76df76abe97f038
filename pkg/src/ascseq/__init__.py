"""Pattern-avoiding ascent sequences: enumeration, formulas, bijections, trees."""

from .core import (PatternSet, asc, contains, format_word, is_ascent_sequence,
                   parse_word, reduce)
from .enumeration import (AvoidanceClass, CountTable, classes_equal, count,
                          count_levels, count_sequence, generate)
from .errors import DomainError, NodeBudgetExceeded
from .kernel import BACKEND

__version__ = "0.1.0"

__all__ = [
    "AvoidanceClass", "BACKEND", "CountTable", "DomainError", "NodeBudgetExceeded",
    "PatternSet", "asc", "classes_equal", "contains", "count", "count_levels",
    "count_sequence", "format_word", "generate", "is_ascent_sequence", "parse_word",
    "reduce",
]
