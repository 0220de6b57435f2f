"""Continued-fraction Moebius chains and the all-permutation identity scan.

A step sequence (e_1, ..., e_r) of integers defines the nested map

    x -> 1/(e_r - 1/(e_{r-1} - ... - 1/(e_1 - x))),

assembled here as the product of the unimodular step matrices
S(e) = [[0, 1], [-1, e]].  The scan operations decide, within declared
bounds, which sequences give the identity map for *every* ordering; that
combinatorial fact is what the negative-definite-cycle obstruction in
camsad.foliation rests on.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement, islice
from typing import Iterable, Iterator, Sequence, Union

from . import _kernels
from ._scan_py import distinct_permutations
from .exact import MoebiusMap, ProjectivePoint, RationalLike, as_projective
from .polynomials import IntPolynomial

#: Permutation-exhaustive operations refuse longer sequences by default
#: (r! orderings per tuple); raise via the guard keyword if you mean it.
DEFAULT_GUARD = 8

StepSeq = Sequence[int]


def _check_steps(steps: StepSeq) -> tuple[int, ...]:
    steps = tuple(steps)
    if not steps:
        raise ValueError("step sequence must be nonempty")
    for e in steps:
        if not isinstance(e, int) or isinstance(e, bool):
            raise ValueError(f"steps must be integers, got {e!r}")
    return steps


def step_map(e: int) -> MoebiusMap:
    """The single-step map x -> 1/(e - x)."""
    return MoebiusMap(0, 1, -1, e)


def cf_map(steps: StepSeq) -> MoebiusMap:
    """Canonical Moebius map of the full chain; determinant 1."""
    steps = _check_steps(steps)
    out = MoebiusMap.identity()
    for e in steps:
        out = step_map(e).compose(out)
    return out


def nested_eval(
    steps: StepSeq, point: Union[ProjectivePoint, RationalLike]
) -> ProjectivePoint:
    """Evaluate the chain step by step in projective coordinates.

    Each step sends (u : v) to (v : e*v - u); poles pass through the
    point at infinity, so the evaluation is total.  Agrees with
    cf_map(steps).apply(point).
    """
    steps = _check_steps(steps)
    p = as_projective(point)
    for e in steps:
        p = ProjectivePoint(p.v, e * p.v - p.u)
    return p


@dataclass(frozen=True)
class ChainCoefficients:
    """Symbolic coefficients of the chain of length r.

    The chain map is (a*x + b)/(c*x + d) with a, b, c, d in
    Z[z1, ..., zr]; b never involves the last variable z_r.
    """

    rank: int
    a: IntPolynomial
    b: IntPolynomial
    c: IntPolynomial
    d: IntPolynomial

    def evaluate(self, steps: StepSeq) -> tuple[int, int, int, int]:
        """Plug integer steps into the four coefficient polynomials."""
        steps = tuple(steps)
        if len(steps) < self.rank:
            raise ValueError(f"need {self.rank} steps, got {len(steps)}")
        a, b, c, d = (p.evaluate(steps) for p in (self.a, self.b, self.c, self.d))
        return (int(a), int(b), int(c), int(d))


def coefficient_polynomials(r: int) -> ChainCoefficients:
    """Coefficient quadruple of rank r via the one-step recurrence.

    Rank 1 is (0, 1, -1, z1); appending a step with variable z_k maps
    (a, b, c, d) to (c, d, z_k*c - a, z_k*d - b).
    """
    if r < 1:
        raise ValueError("rank must be positive")
    a = IntPolynomial.constant(0)
    b = IntPolynomial.constant(1)
    c = IntPolynomial.constant(-1)
    d = IntPolynomial.variable(0)
    for k in range(1, r):
        z = IntPolynomial.variable(k)
        a, b, c, d = c, d, z * c - a, z * d - b
    return ChainCoefficients(r, a, b, c, d)


def cf_is_identity(steps: StepSeq) -> bool:
    """Whether the chain map is the identity (b = c = 0 and a = d)."""
    return cf_map(steps).is_identity()


def all_permutations_identity(steps: StepSeq) -> bool:
    """Whether every distinct ordering of the steps gives the identity.

    The verdict depends only on the multiset of steps, so repeated values
    are not re-tested; the kernel short-circuits at the first failing
    ordering.
    """
    return _kernels.multiset_identity(_check_steps(steps))


def predicted_survivors(r: int) -> set[tuple[int, ...]]:
    """Constant sequences the congruence table marks as identity.

    All-zero sequences close up at even length; all-one and all-minus-one
    sequences close up at lengths divisible by three.
    """
    out: set[tuple[int, ...]] = set()
    if r % 2 == 0:
        out.add((0,) * r)
    if r % 3 == 0:
        out.add((1,) * r)
        out.add((-1,) * r)
    return out


def _scan_chunk(args: tuple[int, int, int, int, int]) -> list[tuple[int, ...]]:
    r, lo, hi, start, stop = args
    domain = combinations_with_replacement(range(lo, hi + 1), r)
    return [m for m in islice(domain, start, stop) if _kernels.multiset_identity(m)]


def passing_multisets(
    r: int, lo: int, hi: int, jobs: int = 1
) -> list[tuple[int, ...]]:
    """Multisets over [lo, hi]^r whose every ordering gives the identity.

    With jobs > 1 the multiset domain is split into index chunks handled
    by worker processes; chunks are merged in order, so the result is
    identical for every worker count.
    """
    if lo > hi:
        return []
    if jobs <= 1:
        return _kernels.scan_identity_multisets(r, lo, hi)
    total = math.comb(hi - lo + r, r)
    chunk = max(1, -(-total // (jobs * 4)))
    tasks = [
        (r, lo, hi, start, min(start + chunk, total))
        for start in range(0, total, chunk)
    ]
    out: list[tuple[int, ...]] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_scan_chunk, tasks):
            out.extend(part)
    return out


def identity_scan(
    r: int,
    bound: int,
    *,
    guard: int = DEFAULT_GUARD,
    jobs: int = 1,
) -> list[tuple[int, ...]]:
    """All tuples with |e_i| <= bound whose every ordering is the identity.

    Enumerates one representative per multiset and expands survivors to
    their distinct orderings; the output is sorted lexicographically.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if bound < 1:
        raise ValueError("bound must be positive")
    if r > guard:
        raise ValueError(
            f"r = {r} exceeds the permutation guard {guard}; "
            "pass a larger guard to override"
        )
    survivors: list[tuple[int, ...]] = []
    for multiset in passing_multisets(r, -bound, bound, jobs=jobs):
        survivors.extend(distinct_permutations(multiset))
    survivors.sort()
    return survivors


@dataclass(frozen=True)
class ConstantIdentityRow:
    """Identity verdicts for the three constant sequences of length r."""

    r: int
    zeros: bool
    ones: bool
    minus_ones: bool

    @property
    def matches_congruences(self) -> bool:
        return (
            self.zeros == (self.r % 2 == 0)
            and self.ones == (self.r % 3 == 0)
            and self.minus_ones == (self.r % 3 == 0)
        )


def constant_identity_table(r_max: int) -> list[ConstantIdentityRow]:
    """Rows r = 1..r_max of identity verdicts for constant sequences."""
    if r_max < 1:
        raise ValueError("r_max must be positive")
    rows = []
    for r in range(1, r_max + 1):
        rows.append(
            ConstantIdentityRow(
                r=r,
                zeros=cf_is_identity((0,) * r),
                ones=cf_is_identity((1,) * r),
                minus_ones=cf_is_identity((-1,) * r),
            )
        )
    return rows
