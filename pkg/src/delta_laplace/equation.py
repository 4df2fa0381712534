"""Difference-equation IVPs  a(n) Delta^k f(n) = rhs(n),  a(n) in {1, n}."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import SemanticError
from .sequences import SeqExpr, simplify


class Coefficient(str, enum.Enum):
    ONE = "1"
    N = "n"


class ICKind(str, enum.Enum):
    VALUE = "value"
    FIRST_DIFFERENCE = "first_difference"


@dataclass(frozen=True)
class InitialCondition:
    kind: ICKind
    index: int
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "kind", ICKind(self.kind))
        object.__setattr__(self, "value", Fraction(self.value))
        if self.index < 1:
            raise SemanticError(f"initial conditions need an index >= 1, got {self.index}")

    def __str__(self):
        head = "f" if self.kind is ICKind.VALUE else "Df"
        return f"{head}({self.index}) = {self.value}"


def value_ic(index: int, value) -> InitialCondition:
    return InitialCondition(ICKind.VALUE, index, Fraction(value))


def difference_ic(index: int, value) -> InitialCondition:
    return InitialCondition(ICKind.FIRST_DIFFERENCE, index, Fraction(value))


@dataclass(frozen=True)
class DifferenceEquation:
    """``coefficient * Delta^order f(n) = rhs(n)`` for n >= 1, plus initial data."""

    coefficient: Coefficient
    order: int
    rhs: SeqExpr
    ics: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "coefficient", Coefficient(self.coefficient))
        object.__setattr__(self, "rhs", simplify(self.rhs))
        object.__setattr__(self, "ics", tuple(self.ics))
        self._validate()

    def _validate(self):
        if self.order not in (1, 2):
            raise SemanticError(f"unsupported difference order {self.order}; only D and D2 are supported")
        if self.coefficient is Coefficient.N and self.order != 1:
            raise SemanticError("the coefficient n is only supported with a first-order difference")
        seen = set()
        for ic in self.ics:
            key = (ic.kind, ic.index)
            if key in seen:
                raise SemanticError(f"duplicate initial condition {ic}")
            seen.add(key)
        if self.order == 1:
            values = [ic for ic in self.ics if ic.kind is ICKind.VALUE]
            if not self.ics:
                raise SemanticError("missing initial condition f(1) = <value> (order 1 needs one value condition)")
            if len(self.ics) != 1 or not values:
                raise SemanticError("a first-order equation needs exactly one condition of the form f(k) = value")
        else:
            if not self.ics:
                raise SemanticError("missing initial conditions f(1) = <value> and Df(1) = <value>")
            if len(self.ics) == 1:
                ic = self.ics[0]
                missing = f"Df({ic.index})" if ic.kind is ICKind.VALUE else f"f({ic.index})"
                raise SemanticError(f"missing initial condition {missing} = <value> (order 2 needs two)")
            if len(self.ics) != 2:
                raise SemanticError("a second-order equation needs exactly two initial conditions")

    @property
    def max_ic_index(self) -> int:
        # a difference condition at k touches f(k + 1)
        return max(ic.index + (ic.kind is ICKind.FIRST_DIFFERENCE) for ic in self.ics)

    def __str__(self):
        from .formatting import equation_to_dsl

        return equation_to_dsl(self)
