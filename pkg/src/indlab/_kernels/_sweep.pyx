# cython: boundscheck=False, wraparound=False, nonecheck=False, cdivision=True
"""Compiled hot loop for the exhaustive labeled-graph sweep."""

from libc.stdint cimport int32_t, int64_t, uint8_t
from libc.stdlib cimport free, malloc


def sweep_codes(int64_t lo, int64_t hi,
                const int32_t[:, ::1] positions,
                const uint8_t[::1] table,
                int64_t witness_cap):
    """Scan graph codes in [lo, hi) and count pattern hits per code.

    Same contract as the fallback: returns (best_count, n_maximizers,
    first_maximizer_codes) with maximizers in ascending code order.
    """
    cdef Py_ssize_t n_subsets = positions.shape[0]
    cdef Py_ssize_t width = positions.shape[1]
    cdef int64_t span = hi - lo
    cdef int64_t cap = witness_cap if witness_cap < span else span
    if cap < 0:
        cap = 0
    cdef int64_t* witbuf = NULL
    if cap > 0:
        witbuf = <int64_t*> malloc(cap * sizeof(int64_t))
        if witbuf == NULL:
            raise MemoryError()
    cdef int64_t code, c, idx, best = -1, ties = 0, nwit = 0
    cdef Py_ssize_t s, b
    try:
        with nogil:
            for code in range(lo, hi):
                c = 0
                for s in range(n_subsets):
                    idx = 0
                    for b in range(width):
                        idx |= ((code >> positions[s, b]) & 1) << b
                    c += table[idx]
                if c > best:
                    best = c
                    ties = 1
                    nwit = 0
                    if cap > 0:
                        witbuf[0] = code
                        nwit = 1
                elif c == best:
                    ties += 1
                    if nwit < cap:
                        witbuf[nwit] = code
                        nwit += 1
        return best, ties, [witbuf[i] for i in range(nwit)]
    finally:
        if witbuf != NULL:
            free(witbuf)
