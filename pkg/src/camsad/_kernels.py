"""Backend selection for the identity-scan kernels.

The compiled kernel (camsad._identity_cy) is used when it imported
successfully and the inputs provably fit in int64; everything else goes
to the arbitrary-precision pure-Python twin.  The envelope is exact: the
entries of every partial step product are bounded by the continuant-style
recurrence M_0 = 1, M_1 = max(B, 1), M_k = B*M_{k-1} + M_{k-2} where B
bounds |e_i|, and every intermediate the kernel forms is below M_r.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import _scan_py

try:
    from . import _identity_cy  # type: ignore[attr-defined]
except ImportError:  # built without a compiler; pure Python twin only
    _identity_cy = None

#: Which kernel backend handles in-envelope calls.
BACKEND = "compiled" if _identity_cy is not None else "pure-python"

_INT64_HEADROOM = 2**62
_MAX_KERNEL_R = 128


def entry_bound(r: int, max_abs: int) -> int:
    """Exact bound on |entry| over all partial step products of length r."""
    if r <= 0:
        return 1
    prev, cur = 1, max(max_abs, 1)
    for _ in range(r - 1):
        prev, cur = cur, max_abs * cur + prev
    return cur


def fits_compiled(r: int, max_abs: int) -> bool:
    return (
        _identity_cy is not None
        and r <= _MAX_KERNEL_R
        and entry_bound(r, max_abs) < _INT64_HEADROOM
    )


def _pick(r: int, max_abs: int):
    return _identity_cy if fits_compiled(r, max_abs) else _scan_py


def raw_is_identity(steps: Sequence[int]) -> bool:
    steps = tuple(steps)
    max_abs = max((abs(e) for e in steps), default=0)
    return _pick(len(steps), max_abs).raw_is_identity(steps)


def multiset_identity(steps: Iterable[int]) -> bool:
    steps = tuple(steps)
    max_abs = max((abs(e) for e in steps), default=0)
    return _pick(len(steps), max_abs).multiset_identity(steps)


def scan_identity_multisets(r: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    return _pick(r, max(abs(lo), abs(hi))).scan_identity_multisets(r, lo, hi)
