"""Pure-Python identity-scan kernel (arbitrary precision).

Twin of the compiled module camsad._identity_cy: same functions, same
results.  This one runs on plain Python integers, so it has no overflow
envelope and is the authority whenever inputs fall outside the compiled
kernel's int64 bound.

The chain matrix of steps (e_1, ..., e_r) is the product
S(e_r) * ... * S(e_1) with S(e) = [[0, 1], [-1, e]]; every step has
determinant 1, so the product is a scalar multiple of the identity
matrix exactly when b = c = 0 and a = d.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence


def raw_is_identity(steps: Sequence[int]) -> bool:
    """Whether the chain map of the steps is the (projective) identity."""
    a, b, c, d = 1, 0, 0, 1
    for e in steps:
        a, b, c, d = c, d, e * c - a, e * d - b
    return b == 0 and c == 0 and a == d


def _next_permutation(seq: list[int]) -> bool:
    """Advance to the lexicographically next permutation, in place."""
    i = len(seq) - 2
    while i >= 0 and seq[i] >= seq[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(seq) - 1
    while seq[j] <= seq[i]:
        j -= 1
    seq[i], seq[j] = seq[j], seq[i]
    seq[i + 1 :] = reversed(seq[i + 1 :])
    return True


def distinct_permutations(steps: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """All distinct orderings of a multiset, in lexicographic order."""
    work = sorted(steps)
    if not work:
        return
    while True:
        yield tuple(work)
        if not _next_permutation(work):
            return


def multiset_identity(steps: Iterable[int]) -> bool:
    """Whether every distinct ordering of the steps gives the identity.

    Orderings are visited lexicographically and the scan stops at the
    first failure, which for almost every multiset is the first one.
    """
    work = sorted(steps)
    while True:
        if not raw_is_identity(work):
            return False
        if not _next_permutation(work):
            return True


def scan_identity_multisets(r: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    """Multisets (as sorted tuples) over [lo, hi]^r passing multiset_identity."""
    return [
        m
        for m in combinations_with_replacement(range(lo, hi + 1), r)
        if multiset_identity(m)
    ]
