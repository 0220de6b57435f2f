"""Sparse multivariate polynomials with integer coefficients.

A polynomial is a finite map from exponent vectors to nonzero integers;
the zero polynomial is the empty map.  Exponent vectors are stored with
trailing zeros stripped, so the same polynomial compares equal no matter
how many ambient variables it is viewed in (z1 in Z[z1] is z1 in
Z[z1, z2]).  Only the ring operations the coefficient recurrences need
are provided; there is no division, gcd, or factorization.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Exponents = tuple[int, ...]
Scalar = Union[int, "IntPolynomial"]


def _strip(exponents: Iterable[int]) -> Exponents:
    e = tuple(exponents)
    n = len(e)
    while n > 0 and e[n - 1] == 0:
        n -= 1
    return e[:n]


class IntPolynomial:
    """Immutable sparse polynomial in Z[z1, ..., zn]."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        canonical: dict[Exponents, int] = {}
        if terms:
            for exponents, coefficient in terms.items():
                key = _strip(exponents)
                if any(e < 0 for e in key):
                    raise ValueError(f"negative exponent in {key}")
                coefficient = int(coefficient)
                if coefficient == 0:
                    continue
                merged = canonical.get(key, 0) + coefficient
                if merged == 0:
                    canonical.pop(key, None)
                else:
                    canonical[key] = merged
        object.__setattr__(self, "_terms", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls({(): value}) if value else cls()

    @classmethod
    def variable(cls, index: int) -> "IntPolynomial":
        """The variable z_{index+1} (zero-based index)."""
        if index < 0:
            raise ValueError("variable index must be nonnegative")
        return cls({(0,) * index + (1,): 1})

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def num_variables(self) -> int:
        return max((len(k) for k in self._terms), default=0)

    def degree_in(self, index: int) -> int:
        """Largest exponent of z_{index+1}; 0 when the variable is absent."""
        return max(
            (k[index] for k in self._terms if len(k) > index),
            default=0,
        )

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def _coerce(self, other: Scalar) -> "IntPolynomial | None":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return None

    def __add__(self, other: Scalar) -> "IntPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for key, coefficient in rhs._terms.items():
            merged = out.get(key, 0) + coefficient
            if merged == 0:
                out.pop(key, None)
            else:
                out[key] = merged
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "IntPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Scalar) -> "IntPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: Scalar) -> "IntPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[Exponents, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in rhs._terms.items():
                width = max(len(k1), len(k2))
                e1 = k1 + (0,) * (width - len(k1))
                e2 = k2 + (0,) * (width - len(k2))
                key = tuple(x + y for x, y in zip(e1, e2))
                merged = out.get(key, 0) + c1 * c2
                if merged == 0:
                    out.pop(key, None)
                else:
                    out[key] = merged
        return IntPolynomial(out)

    __rmul__ = __mul__

    def evaluate(self, values: Iterable[Union[int, Fraction]]) -> Fraction:
        """Exact evaluation; len(values) must cover every variable used."""
        vals = [Fraction(v) for v in values]
        if len(vals) < self.num_variables:
            raise ValueError(
                f"need {self.num_variables} values, got {len(vals)}"
            )
        total = Fraction(0)
        for key, coefficient in self._terms.items():
            term = Fraction(coefficient)
            for index, exponent in enumerate(key):
                if exponent:
                    term *= vals[index] ** exponent
            total += term
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == IntPolynomial.constant(other)._terms
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        def monomial(key: Exponents) -> str:
            factors = [
                f"z{i + 1}" if e == 1 else f"z{i + 1}^{e}"
                for i, e in enumerate(key)
                if e
            ]
            return "*".join(factors)

        parts = []
        for key in sorted(self._terms, key=lambda k: (sum(k), k), reverse=True):
            coefficient = self._terms[key]
            mono = monomial(key)
            if not mono:
                text = str(abs(coefficient))
            elif abs(coefficient) == 1:
                text = mono
            else:
                text = f"{abs(coefficient)}*{mono}"
            sign = "-" if coefficient < 0 else "+"
            parts.append((sign, text))
        first_sign, first_text = parts[0]
        out = ("-" if first_sign == "-" else "") + first_text
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out
