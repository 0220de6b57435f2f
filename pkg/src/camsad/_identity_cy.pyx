# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled identity-scan kernel over int64.

Twin of camsad._scan_py with identical semantics.  Callers are expected
to keep inputs inside the int64 envelope computed by camsad._kernels
(entry growth of the step products obeys a continuant-style recurrence,
so the bound is checked exactly before dispatching here); within that
envelope no intermediate value can overflow.
"""

from libc.stdint cimport int64_t

DEF MAX_R = 128


cdef bint _raw_is_identity(const int64_t* e, Py_ssize_t r) noexcept nogil:
    cdef int64_t a = 1, b = 0, c = 0, d = 1
    cdef int64_t na, nb
    cdef Py_ssize_t i
    for i in range(r):
        na = c
        nb = d
        c = e[i] * c - a
        d = e[i] * d - b
        a = na
        b = nb
    return b == 0 and c == 0 and a == d


cdef bint _next_permutation(int64_t* seq, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i = n - 2
    cdef Py_ssize_t j, lo, hi
    cdef int64_t tmp
    while i >= 0 and seq[i] >= seq[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while seq[j] <= seq[i]:
        j -= 1
    tmp = seq[i]; seq[i] = seq[j]; seq[j] = tmp
    lo = i + 1
    hi = n - 1
    while lo < hi:
        tmp = seq[lo]; seq[lo] = seq[hi]; seq[hi] = tmp
        lo += 1
        hi -= 1
    return True


cdef void _insertion_sort(int64_t* seq, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef int64_t key
    for i in range(1, n):
        key = seq[i]
        j = i - 1
        while j >= 0 and seq[j] > key:
            seq[j + 1] = seq[j]
            j -= 1
        seq[j + 1] = key


cdef bint _multiset_identity(int64_t* work, Py_ssize_t r) noexcept nogil:
    # work must be sorted ascending; it is consumed in place.
    while True:
        if not _raw_is_identity(work, r):
            return False
        if not _next_permutation(work, r):
            return True


cdef Py_ssize_t _load(object steps, int64_t* buf) except -1:
    cdef Py_ssize_t r = len(steps)
    if r > MAX_R:
        raise ValueError(f"step sequence longer than the kernel limit {MAX_R}")
    cdef Py_ssize_t i
    for i in range(r):
        buf[i] = steps[i]
    return r


def raw_is_identity(steps):
    """Whether the chain map of the steps is the (projective) identity."""
    cdef int64_t buf[MAX_R]
    cdef Py_ssize_t r = _load(steps, buf)
    return bool(_raw_is_identity(buf, r))


def multiset_identity(steps):
    """Whether every distinct ordering of the steps gives the identity."""
    cdef int64_t buf[MAX_R]
    cdef Py_ssize_t r = _load(steps, buf)
    if r == 0:
        return True
    _insertion_sort(buf, r)
    return bool(_multiset_identity(buf, r))


def scan_identity_multisets(r, lo, hi):
    """Multisets (as sorted tuples) over [lo, hi]^r passing multiset_identity."""
    cdef Py_ssize_t n = r
    cdef int64_t lo_c = lo, hi_c = hi
    if n <= 0:
        raise ValueError("r must be positive")
    if n > MAX_R:
        raise ValueError(f"r exceeds the kernel limit {MAX_R}")
    if lo_c > hi_c:
        return []
    cdef int64_t state[MAX_R]
    cdef int64_t work[MAX_R]
    cdef Py_ssize_t i, bump
    cdef bint passed
    out = []
    for i in range(n):
        state[i] = lo_c
    while True:
        for i in range(n):
            work[i] = state[i]
        with nogil:
            passed = _multiset_identity(work, n)
        if passed:
            out.append(tuple(state[i] for i in range(n)))
        # next nondecreasing tuple over [lo, hi]^n, lexicographic order
        bump = n - 1
        while bump >= 0 and state[bump] == hi_c:
            bump -= 1
        if bump < 0:
            return out
        state[bump] += 1
        for i in range(bump + 1, n):
            state[i] = state[bump]
