"""Exact finite computations around braid groups, their centers and quotients."""

from .braid import BraidWord, GarsideForm, equals, normal_form
from .fpgroup import Presentation, abelianization, todd_coxeter
from .permgroup import Perm, parse_cycles
from .suites import Report, list_suites, run_suite

__all__ = [
    "BraidWord",
    "GarsideForm",
    "Perm",
    "Presentation",
    "Report",
    "abelianization",
    "equals",
    "list_suites",
    "normal_form",
    "parse_cycles",
    "run_suite",
    "todd_coxeter",
]
__version__ = "0.1.0"
