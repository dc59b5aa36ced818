"""Exact arithmetic in F_p[t]/(f(t))."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from sympy import factorint, isprime

from ..exceptions import (
    DivisionByZeroError,
    NotPrimeError,
    ReducibleError,
    TNotInvertibleError,
    ZeroElementError,
)


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by the monic polynomial b over Z_p (ascending coefficients)."""
    rem = _trim([c % p for c in a])
    db = len(b) - 1
    while len(rem) - 1 >= db:
        lead = rem[-1]
        shift = len(rem) - 1 - db
        for i, c in enumerate(b):
            rem[shift + i] = (rem[shift + i] - lead * c) % p
        _trim(rem)
    return rem


def _monic_polynomials(p: int, degree: int) -> Iterator[tuple[int, ...]]:
    for low in itertools.product(range(p), repeat=degree):
        yield tuple(low) + (1,)


@dataclass(frozen=True)
class Field:
    """The quotient ring F_p[t]/(f(t)) for a monic irreducible f.

    Construct through :func:`make_field`, which validates the parameters.
    """

    p: int
    f: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.f) - 1

    @property
    def order(self) -> int:
        return self.p**self.d

    def __str__(self) -> str:
        return f"F_{self.p}[t]/({format_polynomial(self.f)})"

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        """Reduce an arbitrary coefficient vector into canonical form."""
        rem = _poly_rem(coeffs, self.f, self.p)
        return FieldElement(self, tuple(rem + [0] * (self.d - len(rem))))

    def parse(self, text: str) -> FieldElement:
        return self.element(parse_polynomial(text))

    def const(self, value: int) -> FieldElement:
        return self.element([value])

    @cached_property
    def zero(self) -> FieldElement:
        return self.const(0)

    @cached_property
    def one(self) -> FieldElement:
        return self.const(1)

    @cached_property
    def t(self) -> FieldElement:
        return self.element([0, 1])

    def from_index(self, index: int) -> FieldElement:
        """Element whose coefficients are the base-p digits of index."""
        coeffs = []
        for _ in range(self.d):
            index, digit = divmod(index, self.p)
            coeffs.append(digit)
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> Iterator[FieldElement]:
        for index in range(self.order):
            yield self.from_index(index)


@dataclass(frozen=True)
class FieldElement:
    """An element Σ coeffs[i]·t^i of a :class:`Field`, always reduced."""

    field: Field
    coeffs: tuple[int, ...]

    def _coerce(self, other: FieldElement | int) -> FieldElement:
        if isinstance(other, int):
            return self.field.const(other)
        if other.field != self.field:
            raise ValueError("elements belong to different fields")
        return other

    def __add__(self, other: FieldElement | int) -> FieldElement:
        o = self._coerce(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> FieldElement:
        return self._coerce(other) - self

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        o = self._coerce(other)
        p = self.field.p
        product = [0] * (2 * self.field.d)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    product[i + j] = (product[i + j] + a * b) % p
        return self.field.element(product)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> FieldElement:
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        return self * self._coerce(other).inverse()

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def inverse(self) -> FieldElement:
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self:
            raise DivisionByZeroError("inverse of zero")
        p = self.field.p
        r0, r1 = list(self.field.f), _trim(list(self.coeffs))
        s0: list[int] = []
        s1 = [1]
        while r1:
            inv_lead = pow(r1[-1], -1, p)
            quotient = [0] * max(len(r0) - len(r1) + 1, 1)
            rem = list(r0)
            while len(rem) >= len(r1):
                coef = rem[-1] * inv_lead % p
                shift = len(rem) - len(r1)
                quotient[shift] = coef
                for i, c in enumerate(r1):
                    rem[shift + i] = (rem[shift + i] - coef * c) % p
                _trim(rem)
            qs = [0] * (len(quotient) + len(s1))
            for i, a in enumerate(quotient):
                for j, b in enumerate(s1):
                    qs[i + j] = (qs[i + j] + a * b) % p
            width = max(len(s0), len(qs))
            s_next = [
                ((s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0)) % p
                for i in range(width)
            ]
            r0, r1 = r1, rem
            s0, s1 = s1, _trim(s_next)
        # r0 is a nonzero constant because f is irreducible
        scale = pow(r0[0], -1, p)
        return self.field.element([c * scale for c in s0])

    def index(self) -> int:
        return sum(c * self.field.p**i for i, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)

    def __repr__(self) -> str:
        return f"FieldElement({self})"


def parse_polynomial(text: str) -> list[int]:
    """Parse the comma-separated ascending coefficient form, e.g. "1,1,1"."""
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as e:
        raise ValueError(f"bad polynomial {text!r}: {e}") from e


def format_polynomial(coeffs: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        power = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if not power:
            terms.append(str(c))
        else:
            terms.append(power if c == 1 else f"{c}{power}")
    return "+".join(reversed(terms)) or "0"


def make_field(p: int, f: Sequence[int]) -> Field:
    """Validate (p, f) and build the field F_p[t]/(f), with f made monic."""
    if p < 2 or not isprime(p):
        raise NotPrimeError(p)
    coeffs = _trim([c % p for c in f])
    if len(coeffs) < 2:
        raise ReducibleError(tuple(f), tuple(coeffs))
    inv_lead = pow(coeffs[-1], -1, p)
    monic = tuple(c * inv_lead % p for c in coeffs)
    if monic[0] == 0:
        raise TNotInvertibleError(f"f(0) = 0 for {list(f)}")
    degree = len(monic) - 1
    for k in range(1, degree // 2 + 1):
        for candidate in _monic_polynomials(p, k):
            if not _poly_rem(monic, candidate, p):
                raise ReducibleError(monic, candidate)
    return Field(p, monic)


def mult_order(a: FieldElement) -> int:
    """Least n >= 1 with a^n = 1, found by descending through divisors of p^d - 1."""
    if not a:
        raise ZeroElementError("zero has no multiplicative order")
    order = a.field.order - 1
    for prime, _ in factorint(order).items():
        while order % prime == 0 and (a ** (order // prime)).is_one():
            order //= prime
    return order
