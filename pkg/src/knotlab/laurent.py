"""Exact integer Laurent polynomials in the bracket variable A or the
Jones variable t.

Exponents are stored on a single lattice for both variables: one unit
is t^(1/4), equivalently A^(-1) (because A = t^(-1/4)).  So a term
meaning A^k is stored with exponent -k, and a term meaning t^q is
stored with exponent 4q.  Substituting A = t^(-1/4) into an A-series
is then just a change of variable tag; no exponent arithmetic happens.

Construct A-side values through :meth:`LaurentPoly.a_power` and read
them back through :meth:`LaurentPoly.a_powers` so calling code works
in whole powers of A and never sees the stored sign convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

_VARIABLES = ("A", "t")


def _normalize(items: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    acc: dict[int, int] = {}
    for exp, coef in items:
        total = acc.get(exp, 0) + coef
        if total:
            acc[exp] = total
        else:
            acc.pop(exp, None)
    return tuple(sorted(acc.items()))


@dataclass(frozen=True)
class LaurentPoly:
    """Immutable Laurent polynomial; ``terms`` maps exponent (in
    quarter-powers of t) to a nonzero integer coefficient, stored as a
    sorted tuple of pairs so equality and hashing are structural."""

    variable: str
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.variable not in _VARIABLES:
            raise ValueError(f"variable must be one of {_VARIABLES}")

    # -- construction ------------------------------------------------

    @classmethod
    def zero(cls, variable: str) -> "LaurentPoly":
        return cls(variable, ())

    @classmethod
    def one(cls, variable: str) -> "LaurentPoly":
        return cls(variable, ((0, 1),))

    @classmethod
    def from_terms(cls, variable: str, terms: Mapping[int, int]) -> "LaurentPoly":
        return cls(variable, _normalize(terms.items()))

    @classmethod
    def a_power(cls, k: int, coef: int = 1) -> "LaurentPoly":
        """The monomial coef * A^k."""
        return cls.from_terms("A", {-k: coef})

    @classmethod
    def t_quarters(cls, q: int, coef: int = 1) -> "LaurentPoly":
        """The monomial coef * t^(q/4)."""
        return cls.from_terms("t", {q: coef})

    # -- ring operations ---------------------------------------------

    def _check_same(self, other: "LaurentPoly") -> None:
        if self.variable != other.variable:
            raise ValueError("mixed-variable arithmetic")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_same(other)
        return LaurentPoly(self.variable, _normalize(self.terms + other.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.variable, tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(
                self.variable,
                _normalize((e, c * other) for e, c in self.terms),
            )
        self._check_same(other)
        return LaurentPoly(
            self.variable,
            _normalize(
                (e1 + e2, c1 * c2)
                for e1, c1 in self.terms
                for e2, c2 in other.terms
            ),
        )

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- views and transforms -----------------------------------------

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def a_powers(self) -> dict[int, int]:
        """Coefficients keyed by whole powers of A (tag must be A)."""
        if self.variable != "A":
            raise ValueError("a_powers is only defined for A-polynomials")
        return {-e: c for e, c in self.terms}

    def substitute_a_to_t(self) -> "LaurentPoly":
        """Apply A = t^(-1/4): retag without touching exponents."""
        if self.variable != "A":
            raise ValueError("substitution starts from an A-polynomial")
        return LaurentPoly("t", self.terms)

    def inverted(self) -> "LaurentPoly":
        """Substitute the variable by its reciprocal (t -> 1/t)."""
        return LaurentPoly(
            self.variable, tuple(sorted((-e, c) for e, c in self.terms))
        )

    # -- presentation --------------------------------------------------

    def _display_power(self, exp: int) -> tuple[int, int]:
        """Variable power of a stored exponent as a reduced fraction."""
        if self.variable == "A":
            return -exp, 1
        num, den = exp, 4
        while num % 2 == 0 and den > 1:
            num //= 2
            den //= 2
        return num, den

    def display(self) -> str:
        """Human form like ``-t^4 + t^3 + t`` or ``-A^5 - A^(-3) + A^(-7)``;
        fractional powers print as ``t^(5/2)``."""
        if not self.terms:
            return "0"
        # Descending variable power: for t that is descending stored
        # exponent, for A ascending (stored unit is A^(-1)).
        ordered = sorted(self.terms, reverse=self.variable == "t")
        parts: list[str] = []
        for exp, coef in ordered:
            num, den = self._display_power(exp)
            mag = abs(coef)
            if num == 0:
                body = str(mag)
            else:
                if den == 1:
                    power = "" if num == 1 else f"^{num}" if num > 0 else f"^({num})"
                else:
                    power = f"^({num}/{den})"
                body = ("" if mag == 1 else str(mag)) + self.variable + power
            if not parts:
                parts.append(("-" if coef < 0 else "") + body)
            else:
                parts.append(("- " if coef < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.display()

    # -- wire form -----------------------------------------------------

    def to_wire(self) -> dict:
        return {
            "variable": self.variable,
            "terms": [{"exp_quarters": e, "coef": c} for e, c in self.terms],
            "text": self.display(),
        }

    @classmethod
    def from_wire(cls, data: Mapping) -> "LaurentPoly":
        return cls.from_terms(
            data["variable"],
            {int(t["exp_quarters"]): int(t["coef"]) for t in data["terms"]},
        )
