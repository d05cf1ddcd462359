"""Pure-Python versions of the compiled kernels."""

from itertools import product


def signed_fixed_trace(perm, degrees):
    """Koszul-signed trace of a factor permutation on a tensor product of graded bases.

    ``perm[i]`` is the target position of factor ``i``; ``degrees[i]`` lists the
    degrees of the basis vectors of factor ``i``.  Every product basis vector is
    moved explicitly; the diagonal entry is its Koszul sign when the image equals
    the vector and zero otherwise.  Returns ``{total_degree: trace}``.
    """
    n = len(perm)
    acc: dict[int, int] = {}
    for idx in product(*(range(len(d)) for d in degrees)):
        image = [0] * n
        for i in range(n):
            image[perm[i]] = idx[i]
        if list(idx) != image:
            continue
        degs = [degrees[i][idx[i]] for i in range(n)]
        inversions = sum(
            1
            for i in range(n)
            if degs[i] % 2
            for j in range(i + 1, n)
            if degs[j] % 2 and perm[i] > perm[j]
        )
        total = sum(degs)
        acc[total] = acc.get(total, 0) + (-1 if inversions % 2 else 1)
    return {d: v for d, v in sorted(acc.items()) if v}
