"""Alexander biquandles a ⊻ b = ta + (s−t)b, a ⊼ b = sa, and n-fold operations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from ..exceptions import NotZmFamilyError, SNotUnitError
from .field import Field, FieldElement, mult_order


@dataclass(frozen=True)
class AlexanderBiquandle:
    field: Field
    s: FieldElement
    type: int

    @cached_property
    def _s_powers(self) -> tuple[FieldElement, ...]:
        return _powers(self.s, self.type)

    @cached_property
    def _t_powers(self) -> tuple[FieldElement, ...]:
        return _powers(self.field.t, self.type)

    def s_pow(self, n: int) -> FieldElement:
        """s^n for any integer n (s^type = 1)."""
        return self._s_powers[n % self.type]

    def t_pow(self, n: int) -> FieldElement:
        return self._t_powers[n % self.type]

    def require_family(self, m: int) -> None:
        """Raise unless this biquandle is a Z_m-family, i.e. type divides m."""
        if m < 1 or m % self.type:
            raise NotZmFamilyError(self.type, m)

    def __str__(self) -> str:
        return f"Alexander biquandle over {self.field}, s = {self.s}, type {self.type}"


def _powers(x: FieldElement, n: int) -> tuple[FieldElement, ...]:
    powers = [x.field.one]
    for _ in range(n - 1):
        powers.append(powers[-1] * x)
    return tuple(powers)


def make_alexander(field: Field, s: FieldElement) -> AlexanderBiquandle:
    if not s:
        raise SNotUnitError("s must be a unit")
    type_ = math.lcm(mult_order(s), mult_order(field.t))
    return AlexanderBiquandle(field, s, type_)


def underop_n(
    ab: AlexanderBiquandle, a: FieldElement, b: FieldElement, n: int
) -> FieldElement:
    """a ⊻^[n] b = t^n a + (s^n − t^n) b."""
    tn = ab.t_pow(n)
    return tn * a + (ab.s_pow(n) - tn) * b


def overop_n(
    ab: AlexanderBiquandle, a: FieldElement, b: FieldElement, n: int
) -> FieldElement:
    """a ⊼^[n] b = s^n a; b does not enter."""
    return ab.s_pow(n) * a
