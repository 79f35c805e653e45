# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled set kernels for frameworks with at most 64 vertices."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef class CKernel:
    cdef uint64_t outm[64]
    cdef uint64_t inm[64]
    cdef readonly int n

    backend = "cython"

    def __cinit__(self, out_masks, in_masks):
        cdef int i
        self.n = len(out_masks)
        if self.n > 64:
            raise ValueError("CKernel supports at most 64 vertices")
        for i in range(self.n):
            self.outm[i] = <uint64_t>out_masks[i]
            self.inm[i] = <uint64_t>in_masks[i]

    cdef inline uint64_t _attacked(self, uint64_t s) noexcept nogil:
        cdef uint64_t acc = 0
        while s:
            acc |= self.outm[__builtin_ctzll(s)]
            s &= s - 1
        return acc

    cdef uint64_t _fixpoint(self, uint64_t s) noexcept nogil:
        cdef uint64_t att, keep, x
        cdef int v
        while True:
            att = self._attacked(s)
            keep = s
            x = s
            while x:
                v = __builtin_ctzll(x)
                if self.inm[v] & ~att:
                    keep &= ~((<uint64_t>1) << v)
                x &= x - 1
            if keep == s:
                return s
            s = keep

    def attacked(self, s):
        return self._attacked(<uint64_t>s)

    def conflict_free(self, s):
        cdef uint64_t m = <uint64_t>s
        return (self._attacked(m) & m) == 0

    def fixpoint(self, s):
        return self._fixpoint(<uint64_t>s)

    def collate(self, pool, ambients):
        cands = sorted(set(pool))
        cdef Py_ssize_t nc = len(cands), na = len(ambients)
        cdef Py_ssize_t i, j, lo, hi, mid
        cdef uint64_t u, m
        cdef uint64_t *cu = <uint64_t *>malloc((nc + 1) * sizeof(uint64_t))
        cdef uint64_t *ca = <uint64_t *>malloc((na + 1) * sizeof(uint64_t))
        cdef char *alive = <char *>malloc(nc + 1)
        if cu == NULL or ca == NULL or alive == NULL:
            free(cu); free(ca); free(alive)
            raise MemoryError()
        try:
            for i in range(nc):
                cu[i] = <uint64_t>cands[i]
                alive[i] = 1
            for j in range(na):
                ca[j] = <uint64_t>ambients[j]
            with nogil:
                for i in range(nc):
                    u = cu[i]
                    for j in range(na):
                        m = self._fixpoint(u & ca[j])
                        if m != u:
                            lo = 0
                            hi = nc
                            while lo < hi:
                                mid = (lo + hi) >> 1
                                if cu[mid] < m:
                                    lo = mid + 1
                                else:
                                    hi = mid
                            if lo < nc and cu[lo] == m:
                                alive[lo] = 0
            return [cands[i] for i in range(nc) if alive[i]]
        finally:
            free(cu)
            free(ca)
            free(alive)
