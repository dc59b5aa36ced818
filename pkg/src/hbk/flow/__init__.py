"""Z_m-flows, their gcd, Alexander numberings and flow transport across moves."""

from .association import associate_flow
from .numbering import Numbering, alexander_numbering
from .space import (
    DEFAULT_FLOW_CAP,
    Flow,
    FlowSpace,
    classical_flow,
    constraint_rows,
    enumerate_flows,
    flow_space,
    flow_violations,
    gcd_of_flow,
    make_flow,
)

__all__ = [
    "DEFAULT_FLOW_CAP",
    "Flow",
    "FlowSpace",
    "Numbering",
    "alexander_numbering",
    "associate_flow",
    "classical_flow",
    "constraint_rows",
    "enumerate_flows",
    "flow_space",
    "flow_violations",
    "gcd_of_flow",
    "make_flow",
]
