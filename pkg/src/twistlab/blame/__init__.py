"""Blame calculus over finite carriers."""
from .casts import (App, Blame, BlameLabel, Cast, FunTable, Result, Universe, Value, eval_cast,
                    parse_term, render_term)
from .suites import blame_safety_suite, check_decomposition, refinement_example
from .types import (BOOL, DECOMPOSITION_CONFIG, DYN, FUN_RULES, INT4, Carrier, Dyn, Fun, Refine,
                    TypeConfig, base, parse_type, refine, subtype)

__all__ = [
    "App", "Blame", "BlameLabel", "Cast", "FunTable", "Result", "Universe", "Value", "eval_cast",
    "parse_term", "render_term", "blame_safety_suite", "check_decomposition", "refinement_example",
    "BOOL", "DECOMPOSITION_CONFIG", "DYN", "FUN_RULES", "INT4", "Carrier", "Dyn", "Fun", "Refine",
    "TypeConfig", "base", "parse_type", "refine", "subtype",
]
