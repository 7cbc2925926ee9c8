# cython: language_level=3
"""Compiled twins of ``_pykernels``; same signatures, same results."""
from libc.stdlib cimport malloc, free


cdef int* _load(object seq, Py_ssize_t n) except NULL:
    cdef int* buf = <int*>malloc((n + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return buf


def is_simple(values):
    cdef Py_ssize_t n = len(values)
    if n <= 2:
        return True
    cdef int* p = _load(values, n)
    cdef Py_ssize_t start, end, stop
    cdef int lo, hi, v
    cdef bint simple = True
    try:
        for start in range(n - 1):
            lo = p[start]
            hi = lo
            stop = n - 1 if start == 0 else n
            for end in range(start + 1, stop):
                v = p[end]
                if v < lo:
                    lo = v
                elif v > hi:
                    hi = v
                if hi - lo == end - start:
                    simple = False
                    break
            if not simple:
                break
    finally:
        free(p)
    return simple


cdef bint _extend(int* p, Py_ssize_t n, int* q, Py_ssize_t k,
                  Py_ssize_t* chosen, Py_ssize_t depth, Py_ssize_t start):
    if depth == k:
        return True
    cdef int want = q[depth]
    cdef int v
    cdef Py_ssize_t pos, prev
    cdef bint ok
    for pos in range(start, n - (k - depth) + 1):
        v = p[pos]
        ok = True
        for prev in range(depth):
            if (p[chosen[prev]] < v) != (q[prev] < want):
                ok = False
                break
        if ok:
            chosen[depth] = pos
            if _extend(p, n, q, k, chosen, depth + 1, pos + 1):
                return True
    return False


def contains_pattern(values, pattern):
    cdef Py_ssize_t n = len(values)
    cdef Py_ssize_t k = len(pattern)
    if k > n:
        return False
    cdef int* p = _load(values, n)
    cdef int* q = _load(pattern, k)
    cdef Py_ssize_t* chosen = <Py_ssize_t*>malloc((k + 1) * sizeof(Py_ssize_t))
    cdef bint found
    try:
        found = _extend(p, n, q, k, chosen, 0, 0)
    finally:
        free(p)
        free(q)
        free(chosen)
    return found


def avoids_321(values):
    cdef int best = 0
    cdef int last_small = 0
    cdef int v
    for item in values:
        v = item
        if v > best:
            best = v
        elif v < last_small:
            return False
        else:
            last_small = v
    return True


def crossing_counts(values):
    cdef Py_ssize_t n = len(values)
    cdef int* p = _load(values, n)
    cdef int* prefix = <int*>malloc((n + 1) * sizeof(int))
    cdef Py_ssize_t j
    out = []
    try:
        prefix[0] = 0
        for j in range(1, n):
            prefix[j] = prefix[j - 1] + ((p[j] > j + 1) != (p[j - 1] > j))
        for j in range(n):
            if p[j] > j + 1:
                out.append(prefix[p[j] - 1] - prefix[j])
    finally:
        free(p)
        free(prefix)
    return out
