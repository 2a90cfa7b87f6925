"""Differential operators over Q(t): arithmetic, local analysis, equivalence."""
from .intertwine import intertwiner_search, lclm
from .local import (AlgebraicNumber, ExponentReport, FuchsianReport,
                    fuchsian_analysis, indicial_exponents)
from .operator import (DiffOperator, op_apply, op_change_variable, op_multiply,
                       taylor_solution)
from .sympow import symmetric_power

__all__ = ["DiffOperator", "op_apply", "op_multiply", "op_change_variable",
           "symmetric_power", "indicial_exponents", "fuchsian_analysis",
           "ExponentReport", "FuchsianReport", "AlgebraicNumber",
           "intertwiner_search", "lclm", "taylor_solution"]
