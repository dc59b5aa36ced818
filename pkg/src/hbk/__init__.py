"""hbk - coloring invariants of handlebody-knot diagrams over Alexander biquandles"""

from .algebra import AlexanderBiquandle, make_alexander, make_field
from .bounds import gordian_lower_bound, unknotting_lower_bound
from .coloring import coloring_dimension, coloring_matrix
from .diagram import Diagram, load_diagram, parse_diagram
from .exceptions import HbkError
from .flow import enumerate_flows, flow_space

__version__ = "0.1.0"
__all__ = [
    "AlexanderBiquandle",
    "Diagram",
    "HbkError",
    "coloring_dimension",
    "coloring_matrix",
    "enumerate_flows",
    "flow_space",
    "gordian_lower_bound",
    "load_diagram",
    "make_alexander",
    "make_field",
    "parse_diagram",
    "unknotting_lower_bound",
]
