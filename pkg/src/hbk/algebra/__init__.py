"""Finite-field arithmetic and Alexander biquandles."""

from .axioms import (
    AxiomCheck,
    AxiomReport,
    FiniteBiquandleTable,
    alexander_table,
    check_biquandle_axioms,
    check_gfamily_axioms,
    check_quandle_degeneration,
)
from .biquandle import AlexanderBiquandle, make_alexander, overop_n, underop_n
from .field import (
    Field,
    FieldElement,
    format_polynomial,
    make_field,
    mult_order,
    parse_polynomial,
)

__all__ = [
    "AlexanderBiquandle",
    "AxiomCheck",
    "AxiomReport",
    "Field",
    "FieldElement",
    "FiniteBiquandleTable",
    "alexander_table",
    "check_biquandle_axioms",
    "check_gfamily_axioms",
    "check_quandle_degeneration",
    "format_polynomial",
    "make_alexander",
    "make_field",
    "mult_order",
    "overop_n",
    "parse_polynomial",
    "underop_n",
]
