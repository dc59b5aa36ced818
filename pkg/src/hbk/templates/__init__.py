"""Template diagrams."""

from .diagrams import (
    E_TEMPLATE,
    HANDCUFF_TEMPLATE,
    TREFOIL_TEMPLATE,
    UNKNOT_TEMPLATE,
)
from .library import (
    TEMPLATE_NAMES,
    TEMPLATES,
    get_template,
    trivial_diagram,
    trivial_link,
)

__all__ = [
    "E_TEMPLATE",
    "HANDCUFF_TEMPLATE",
    "TEMPLATES",
    "TEMPLATE_NAMES",
    "TREFOIL_TEMPLATE",
    "UNKNOT_TEMPLATE",
    "get_template",
    "trivial_diagram",
    "trivial_link",
]
