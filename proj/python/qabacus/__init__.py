"""Finite and graded representations of CAR and CCR.

Operators are returned as scipy.sparse matrices; structured values (reports,
star configurations, tape states) as plain dicts using the same JSON layouts
as the command-line tool.
"""

from ._core import *  # noqa: F401,F403
from ._core import BudgetExceeded  # noqa: F401

__version__ = "0.1.0"
