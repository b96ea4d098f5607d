# cython: language_level=3
"""Compiled kernels; algorithmically identical to idrlab._fallback.

The arithmetic stays on Python ints (exactness over machine-word speed),
the win comes from typed loop counters and list indexing.
"""


def forward_difference_coeffs(values):
    cdef Py_ssize_t n = len(values)
    cdef Py_ssize_t i, k
    cdef list work = list(values)
    cdef list coeffs = [0] * n
    if n > 0:
        coeffs[0] = work[0]
    for k in range(1, n):
        for i in range(n - k):
            work[i] = work[i + 1] - work[i]
        coeffs[k] = work[0]
    return coeffs


def newton_values(coeffs, Py_ssize_t x_max):
    cdef Py_ssize_t n = len(coeffs)
    cdef Py_ssize_t x, k, top
    cdef list out = []
    cdef object acc, b
    for x in range(x_max + 1):
        acc = 0
        b = 1
        top = x if x < n - 1 else n - 1
        for k in range(top + 1):
            if k > 0:
                b = b * (x - k + 1) // k
            acc = acc + coeffs[k] * b
        out.append(acc)
    return out


def first_idr_violation(values):
    cdef Py_ssize_t n = len(values)
    cdef Py_ssize_t a, b
    cdef object fa
    for a in range(1, n):
        fa = values[a]
        for b in range(a):
            if (fa - values[b]) % (a - b) != 0:
                return (a, b)
    return None
