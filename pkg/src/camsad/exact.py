"""Exact scalar arithmetic: rationals, projective points, Moebius maps.

Everything here is integer or rational arithmetic with canonical
representatives, so equality is plain field comparison and no floating
point appears anywhere.  All values are immutable after construction and
safe to share between concurrent workers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt
from typing import Union

#: Scalar field for all index arithmetic.  fractions.Fraction already
#: maintains the canonical form we rely on: reduced, denominator > 0,
#: str() rendering "p/q" (or "p" when the denominator is 1).
Rational = Fraction

RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)\s*(?:/\s*(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse the wire form "p/q" (or "p"): integer p, positive integer q."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed rational {text!r}: expected 'p' or 'p/q'")
    numerator = int(m.group(1))
    denominator = int(m.group(2)) if m.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"malformed rational {text!r}: zero denominator")
    return Fraction(numerator, denominator)


def format_rational(x: RationalLike) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class ProjectivePoint:
    """A point (u : v) of the projective line over the rationals.

    Canonical representative: gcd(|u|, |v|) = 1 and the first nonzero
    coordinate is positive.  (1 : 0) is the point at infinity, which is
    how poles of Moebius maps stay first-class values.
    """

    u: int
    v: int

    def __post_init__(self) -> None:
        u, v = self.u, self.v
        if u == 0 and v == 0:
            raise ValueError("(0 : 0) is not a projective point")
        g = gcd(abs(u), abs(v))
        u //= g
        v //= g
        if u < 0 or (u == 0 and v < 0):
            u, v = -u, -v
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @classmethod
    def from_rational(cls, x: RationalLike) -> "ProjectivePoint":
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @classmethod
    def infinity(cls) -> "ProjectivePoint":
        return cls(1, 0)

    @classmethod
    def parse(cls, text: str) -> "ProjectivePoint":
        """Parse "u:v", a rational "p/q", or "inf"."""
        text = text.strip()
        if text.lower() in ("inf", "infinity", "oo"):
            return cls.infinity()
        if ":" in text:
            parts = text.split(":")
            if len(parts) != 2:
                raise ValueError(f"malformed projective point {text!r}")
            try:
                return cls(int(parts[0]), int(parts[1]))
            except ValueError as exc:
                raise ValueError(f"malformed projective point {text!r}") from exc
        return cls.from_rational(parse_rational(text))

    @property
    def is_infinity(self) -> bool:
        return self.v == 0

    def to_rational(self) -> Fraction:
        if self.v == 0:
            raise ValueError("the point at infinity has no rational value")
        return Fraction(self.u, self.v)

    def reciprocal(self) -> "ProjectivePoint":
        """Projective 1/x; sends 0 to infinity and back."""
        return ProjectivePoint(self.v, self.u)

    def __str__(self) -> str:
        return f"{self.u}:{self.v}"


def as_projective(value: Union[ProjectivePoint, RationalLike]) -> ProjectivePoint:
    if isinstance(value, ProjectivePoint):
        return value
    return ProjectivePoint.from_rational(value)


class FixedPointsKind(Enum):
    IDENTITY = "identity"
    IRRATIONAL = "irrational"
    POINTS = "points"


@dataclass(frozen=True)
class FixedPoints:
    """Fixed points of a Moebius map over the rational projective line.

    kind IDENTITY: every point is fixed.  kind IRRATIONAL: the fixed
    points exist only over a quadratic extension (negative or non-square
    discriminant), so none is reported.  kind POINTS: the rational fixed
    points, sorted canonically.
    """

    kind: FixedPointsKind
    points: tuple[ProjectivePoint, ...] = ()


@dataclass(frozen=True)
class MoebiusMap:
    """The map x -> (a*x + b)/(c*x + d) as a 2x2 integer matrix up to sign.

    Canonical representative: gcd(|a|, |b|, |c|, |d|) = 1 and the first
    nonzero entry in order (a, b, c, d) is positive.  Equality of maps is
    equality of canonical forms.  Nondegeneracy (a*d - b*c != 0) is
    required and preserved by composition.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        entries = (self.a, self.b, self.c, self.d)
        if self.a * self.d - self.b * self.c == 0:
            raise ValueError(f"degenerate map {entries}: zero determinant")
        g = 0
        for x in entries:
            g = gcd(g, abs(x))
        entries = tuple(x // g for x in entries)
        for x in entries:
            if x != 0:
                if x < 0:
                    entries = tuple(-y for y in entries)
                break
        object.__setattr__(self, "a", entries[0])
        object.__setattr__(self, "b", entries[1])
        object.__setattr__(self, "c", entries[2])
        object.__setattr__(self, "d", entries[3])

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1, 0, 0, 1)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def determinant(self) -> int:
        return self.a * self.d - self.b * self.c

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """self after other, i.e. matrix product self * other."""
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return MoebiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        return self.compose(other)

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def apply(self, point: Union[ProjectivePoint, RationalLike]) -> ProjectivePoint:
        """Evaluate at a projective point; total, poles land on infinity."""
        p = as_projective(point)
        return ProjectivePoint(self.a * p.u + self.b * p.v, self.c * p.u + self.d * p.v)

    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def fixed_points(self) -> FixedPoints:
        """Solve apply(x) = x exactly over the rationals.

        Finite fixed points are the roots of c*x^2 + (d - a)*x - b = 0;
        infinity is fixed exactly when c = 0.
        """
        if self.is_identity():
            return FixedPoints(FixedPointsKind.IDENTITY)
        a, b, c, d = self.entries
        points: list[ProjectivePoint] = []
        if c == 0:
            points.append(ProjectivePoint.infinity())
            if a != d:
                points.append(ProjectivePoint(b, d - a))
        else:
            disc = (d - a) ** 2 + 4 * b * c
            if disc < 0:
                return FixedPoints(FixedPointsKind.IRRATIONAL)
            root = isqrt(disc)
            if root * root != disc:
                return FixedPoints(FixedPointsKind.IRRATIONAL)
            points.append(ProjectivePoint(a - d + root, 2 * c))
            if root != 0:
                points.append(ProjectivePoint(a - d - root, 2 * c))
        points.sort(key=lambda p: (p.u, p.v))
        return FixedPoints(FixedPointsKind.POINTS, tuple(points))

    def __str__(self) -> str:
        return f"[{self.a}, {self.b}, {self.c}, {self.d}]"
