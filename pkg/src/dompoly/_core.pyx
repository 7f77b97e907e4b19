# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels. Signatures mirror ``dompoly._pycore``."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, uint8_t, int64_t
from libc.stdlib cimport malloc, free

cnp.import_array()

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil


cdef inline uint64_t _full(int n) nogil:
    return <uint64_t>0xFFFFFFFFFFFFFFFF if n == 64 else ((<uint64_t>1 << n) - 1)


cdef void _cover_table(const uint64_t* closed, int base, int m,
                       uint64_t* cov, uint8_t* pop) noexcept nogil:
    cdef Py_ssize_t i, j, step
    cov[0] = 0
    pop[0] = 0
    for i in range(m):
        step = <Py_ssize_t>1 << i
        for j in range(step):
            cov[step + j] = cov[j] | closed[base + i]
            pop[step + j] = pop[j] + 1


def split_point(int n):
    return n // 2


def count_dominating(const uint64_t[::1] closed, int n, Py_ssize_t h_lo, Py_ssize_t h_hi):
    """Per-size counts of dominating sets whose high part lies in [h_lo, h_hi)."""
    cdef int a = n // 2
    cdef int b = n - a
    cdef Py_ssize_t nl = <Py_ssize_t>1 << a
    cdef Py_ssize_t nh = <Py_ssize_t>1 << b
    cdef uint64_t full = _full(n)
    out = np.zeros(n + 1, dtype=np.uint64)
    cdef uint64_t[::1] counts = out
    if n == 0:
        counts[0] = 1
        return out
    if h_hi > nh:
        h_hi = nh
    cdef uint64_t* cov_l = <uint64_t*>malloc(nl * sizeof(uint64_t))
    cdef uint8_t* pop_l = <uint8_t*>malloc(nl)
    cdef uint64_t* cov_h = <uint64_t*>malloc(nh * sizeof(uint64_t))
    cdef uint8_t* pop_h = <uint8_t*>malloc(nh)
    cdef uint64_t union_l = 0, need, ch
    cdef Py_ssize_t h, l
    cdef int ph, i
    if cov_l == NULL or pop_l == NULL or cov_h == NULL or pop_h == NULL:
        free(cov_l); free(pop_l); free(cov_h); free(pop_h)
        raise MemoryError()
    with nogil:
        _cover_table(&closed[0], 0, a, cov_l, pop_l)
        _cover_table(&closed[0], a, b, cov_h, pop_h)
        for i in range(a):
            union_l |= closed[i]
        for h in range(h_lo, h_hi):
            ch = cov_h[h]
            need = full & ~ch
            if need & ~union_l:
                continue
            ph = pop_h[h]
            if need == 0:
                for l in range(nl):
                    counts[ph + pop_l[l]] += 1
                continue
            for l in range(nl):
                if (cov_l[l] & need) == need:
                    counts[ph + pop_l[l]] += 1
    free(cov_l); free(pop_l); free(cov_h); free(pop_h)
    return out


def undominated_k(const uint64_t[::1] closed, int n, int k):
    """Undominated-vertex masks ``V - N(S)`` for every k-subset S."""
    cdef int a = n // 2
    cdef int b = n - a
    cdef Py_ssize_t nl = <Py_ssize_t>1 << a
    cdef Py_ssize_t nh = <Py_ssize_t>1 << b
    cdef uint64_t full = _full(n)
    cdef Py_ssize_t total = 0
    cdef Py_ssize_t h, l, idx = 0
    cdef int need_pop
    if k < 0 or k > n:
        return np.zeros(0, dtype=np.uint64)
    low_cov = np.zeros(nl, dtype=np.uint64)
    low_pop = np.zeros(nl, dtype=np.uint8)
    high_cov = np.zeros(nh, dtype=np.uint64)
    high_pop = np.zeros(nh, dtype=np.uint8)
    cdef uint64_t[::1] cl = low_cov, chv = high_cov
    cdef uint8_t[::1] pl = low_pop, phv = high_pop
    if n > 0:
        _cover_table(&closed[0], 0, a, &cl[0], &pl[0])
        _cover_table(&closed[0], a, b, &chv[0], &phv[0])
    else:
        cl[0] = 0; pl[0] = 0; chv[0] = 0; phv[0] = 0
    # group low indices by popcount
    order_np = np.argsort(low_pop, kind="stable").astype(np.int64)
    bounds_np = np.searchsorted(low_pop[order_np], np.arange(a + 2)).astype(np.int64)
    cdef int64_t[::1] order = order_np
    cdef int64_t[::1] bounds = bounds_np
    for h in range(nh):
        need_pop = k - phv[h]
        if 0 <= need_pop <= a:
            total += bounds[need_pop + 1] - bounds[need_pop]
    out = np.empty(total, dtype=np.uint64)
    cdef uint64_t[::1] res = out
    with nogil:
        for h in range(nh):
            need_pop = k - phv[h]
            if need_pop < 0 or need_pop > a:
                continue
            for l in range(bounds[need_pop], bounds[need_pop + 1]):
                res[idx] = full & ~(chv[h] | cl[order[l]])
                idx += 1
    return out


cdef inline uint64_t _splitmix(uint64_t* state) noexcept nogil:
    state[0] += <uint64_t>0x9E3779B97F4A7C15
    cdef uint64_t z = state[0]
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
    return z ^ (z >> 31)


def sample_hits(const uint64_t[:, ::1] closed_words, int n, int k, Py_ssize_t samples, uint64_t seed):
    """Number of dominating sets among ``samples`` uniform k-subsets (Algorithm S)."""
    cdef Py_ssize_t words = closed_words.shape[1]
    cdef uint64_t state = seed
    cdef Py_ssize_t s, hits = 0, w
    cdef int i, need, rem, j
    cdef bint ok
    cdef uint64_t x
    cdef uint64_t* cov = <uint64_t*>malloc((words if words > 0 else 1) * sizeof(uint64_t))
    if cov == NULL:
        raise MemoryError()
    with nogil:
        for s in range(samples):
            for w in range(words):
                cov[w] = 0
            need = k
            for i in range(n):
                if need == 0:
                    break
                rem = n - i
                if need == rem:
                    for j in range(i, n):
                        for w in range(words):
                            cov[w] |= closed_words[j, w]
                    break
                x = _splitmix(&state)
                if <uint64_t>((<u128>x * <u128>rem) >> 64) < <uint64_t>need:
                    for w in range(words):
                        cov[w] |= closed_words[i, w]
                    need -= 1
            ok = True
            for w in range(words):
                if w == words - 1 and n % 64 != 0:
                    if cov[w] != ((<uint64_t>1 << (n % 64)) - 1):
                        ok = False
                elif cov[w] != <uint64_t>0xFFFFFFFFFFFFFFFF:
                    ok = False
            if ok:
                hits += 1
    free(cov)
    return hits
