"""Custom exceptions for the hbk library."""

from typing import Any, Optional


class HbkError(Exception):
    """Base exception for hbk errors."""

    code = "error"


# Algebra


class NotPrimeError(HbkError):
    """Raised when the field characteristic is not a prime."""

    code = "not_prime"

    def __init__(self, p: int):
        super().__init__(f"{p} is not a prime")
        self.p = p


class ReducibleError(HbkError):
    """Raised when the modulus polynomial factors over Z_p."""

    code = "reducible"

    def __init__(self, f: tuple[int, ...], factor: tuple[int, ...]):
        if len(factor) < 2:
            super().__init__(f"polynomial {list(f)} has degree below 1")
        else:
            super().__init__(f"polynomial {list(f)} is divisible by {list(factor)}")
        self.f = f
        self.factor = factor


class TNotInvertibleError(HbkError):
    """Raised when f(0) = 0, so t is not a unit of the quotient ring."""

    code = "t_not_invertible"


class DivisionByZeroError(HbkError):
    """Raised when inverting the zero element."""

    code = "division_by_zero"


class ZeroElementError(HbkError):
    """Raised when a multiplicative order of zero is requested."""

    code = "zero_element"


class SNotUnitError(HbkError):
    """Raised when the biquandle parameter s is zero."""

    code = "s_not_unit"


class NotZmFamilyError(HbkError):
    """Raised when the biquandle type does not divide the flow modulus."""

    code = "not_zm_family"

    def __init__(self, type_: int, m: int):
        super().__init__(f"type {type_} does not divide m = {m}")
        self.type = type_
        self.m = m


# Diagrams


class DiagramSyntaxError(HbkError):
    """Raised when a diagram document is malformed."""

    code = "syntax"

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message if field is None else f"{field}: {message}")
        self.field = field


class DuplicateSlotError(DiagramSyntaxError):
    """Raised when a semi-arc occupies the same slot kind twice."""

    code = "duplicate_slot"

    def __init__(self, semi_arc: str, direction: str):
        super().__init__(f"semi-arc {semi_arc!r} appears in two {direction}-slots")
        self.semi_arc = semi_arc


class MissingSlotError(DiagramSyntaxError):
    """Raised when a semi-arc lacks a head or a tail."""

    code = "missing_slot"

    def __init__(self, semi_arc: str, direction: str):
        super().__init__(f"semi-arc {semi_arc!r} has no {direction}-slot")
        self.semi_arc = semi_arc


class BadSignError(DiagramSyntaxError):
    """Raised when a crossing sign is not +1 or -1."""

    code = "bad_sign"


class UnknownCrossingError(HbkError):
    """Raised when a crossing id does not exist in the diagram."""

    code = "unknown_crossing"

    def __init__(self, crossing: str):
        super().__init__(f"unknown crossing {crossing!r}")
        self.crossing = crossing


class InvalidDiagramError(HbkError):
    """Raised when an operation requires a valid diagram and validation failed."""

    code = "invalid_diagram"

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


# Flows and colorings


class BadModulusError(HbkError):
    """Raised when the flow modulus is below 1."""

    code = "bad_modulus"


class InvalidFlowError(HbkError):
    """Raised when a flow violates a crossing or vertex condition."""

    code = "invalid_flow"


class TooManyFlowsError(HbkError):
    """Raised when a flow enumeration would exceed the configured cap."""

    code = "too_many_flows"

    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} flows exceed the enumeration cap {cap}")
        self.count = count
        self.cap = cap


class TooLargeError(HbkError):
    """Raised when a brute-force search is estimated above its cap."""

    code = "too_large"

    def __init__(self, estimate: int, cap: int):
        super().__init__(f"estimated work {estimate} exceeds cap {cap}")
        self.estimate = estimate
        self.cap = cap


class InconsistentError(HbkError):
    """Raised when an Alexander numbering cannot be made consistent."""

    code = "inconsistent"


class EmptyGcdClassError(HbkError):
    """Raised when a gcd class realized by one diagram is empty in the other."""

    code = "empty_gcd_class"

    def __init__(self, gcd: int):
        super().__init__(f"no flow of gcd {gcd} in the second diagram")
        self.gcd = gcd


# Moves


class NotApplicableError(HbkError):
    """Raised when a move site does not match the diagram."""

    code = "not_applicable"

    def __init__(self, site: Any, reason: str = ""):
        message = f"move {site} is not applicable"
        super().__init__(f"{message}: {reason}" if reason else message)
        self.site = site
