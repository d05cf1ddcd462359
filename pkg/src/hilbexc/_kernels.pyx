# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled brute-force kernels; see ``_kernels_py`` for the reference semantics."""

from libc.stdlib cimport calloc, free


def signed_fixed_trace(perm, degrees):
    """Koszul-signed trace of a factor permutation on a tensor product of graded bases.

    ``perm[i]`` is the target position of factor ``i``; ``degrees[i]`` lists the
    degrees of the basis vectors of factor ``i``.  Returns ``{total_degree: trace}``.
    """
    cdef Py_ssize_t n = len(perm)
    if n == 0:
        return {0: 1}
    cdef Py_ssize_t i, j, total_basis = 1, offset = 0
    cdef long lo = 0, hi = 0, dmin, dmax, d
    for i in range(n):
        if len(degrees[i]) == 0:
            return {}
        dmin = min(degrees[i])
        dmax = max(degrees[i])
        lo += dmin
        hi += dmax
        total_basis *= len(degrees[i])

    cdef int *p = <int *> calloc(n, sizeof(int))
    cdef int *radix = <int *> calloc(n, sizeof(int))
    cdef int *start = <int *> calloc(n, sizeof(int))
    cdef int *idx = <int *> calloc(n, sizeof(int))
    cdef long *flat = <long *> calloc(sum(len(x) for x in degrees), sizeof(long))
    cdef long long *acc = <long long *> calloc(hi - lo + 1, sizeof(long long))
    if not (p and radix and start and idx and flat and acc):
        free(p); free(radix); free(start); free(idx); free(flat); free(acc)
        raise MemoryError()
    for i in range(n):
        p[i] = perm[i]
        radix[i] = len(degrees[i])
        start[i] = offset
        for j in range(radix[i]):
            flat[offset + j] = degrees[i][j]
        offset += radix[i]

    cdef Py_ssize_t step
    cdef int fixed, inversions
    cdef long total
    try:
        for step in range(total_basis):
            fixed = 1
            for i in range(n):
                if idx[p[i]] != idx[i]:
                    fixed = 0
                    break
            if fixed:
                inversions = 0
                total = 0
                for i in range(n):
                    d = flat[start[i] + idx[i]]
                    total += d
                    if d & 1:
                        for j in range(i + 1, n):
                            if p[i] > p[j] and (flat[start[j] + idx[j]] & 1):
                                inversions += 1
                if inversions & 1:
                    acc[total - lo] -= 1
                else:
                    acc[total - lo] += 1
            # mixed-radix increment
            i = n - 1
            while i >= 0:
                idx[i] += 1
                if idx[i] < radix[i]:
                    break
                idx[i] = 0
                i -= 1
        return {lo + i: acc[i] for i in range(hi - lo + 1) if acc[i] != 0}
    finally:
        free(p); free(radix); free(start); free(idx); free(flat); free(acc)
