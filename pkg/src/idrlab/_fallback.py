"""Pure-Python kernels for the exact-integer inner loops.

These are the reference implementations.  `idrlab._speedups` mirrors them
one-to-one in Cython; `idrlab.kernels` picks whichever is importable.
Both operate on plain Python ints, so results are exact at any magnitude.
"""

from __future__ import annotations


def forward_difference_coeffs(values: list) -> list:
    """Iterated forward differences; the row heads are the series coefficients."""
    work = list(values)
    n = len(work)
    coeffs = [0] * n
    if n:
        coeffs[0] = work[0]
    for k in range(1, n):
        for i in range(n - k):
            work[i] = work[i + 1] - work[i]
        coeffs[k] = work[0]
    return coeffs


def newton_values(coeffs: list, x_max: int) -> list:
    """Evaluate sum_k coeffs[k] * C(x, k) for x = 0..x_max.

    Binomials are built incrementally along each row; coefficients past the
    stored prefix count as zero.
    """
    n = len(coeffs)
    out = []
    for x in range(x_max + 1):
        acc = 0
        b = 1
        top = x if x < n - 1 else n - 1
        for k in range(top + 1):
            if k:
                b = b * (x - k + 1) // k
            acc += coeffs[k] * b
        out.append(acc)
    return out


def first_idr_violation(values: list):
    """First pair (a, b), a > b, with (a - b) not dividing values[a] - values[b].

    Pairs are scanned in lexicographic (a, b) order.  Returns None when the
    whole prefix passes.
    """
    n = len(values)
    for a in range(1, n):
        fa = values[a]
        for b in range(a):
            if (fa - values[b]) % (a - b):
                return (a, b)
    return None
