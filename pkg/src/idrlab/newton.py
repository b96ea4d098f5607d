"""Conversion between value tables and Newton series coefficients.

A table f(0..N) and the coefficient prefix a_0..a_N determine each other:
f(x) = sum_k a_k * C(x, k).  Coefficients come out of the forward-difference
triangle; values come back via incremental binomials.  Both directions run
on the selected kernel backend.
"""

from __future__ import annotations

from idrlab import kernels


def coeffs_from_values(values: list[int]) -> list[int]:
    """Newton coefficients a_0..a_N of the table f(0..N)."""
    if not values:
        raise ValueError("coeffs_from_values requires a non-empty table")
    return kernels.forward_difference_coeffs(list(values))


def values_from_coeffs(coeffs: list[int], x_max: int) -> list[int]:
    """Table f(0..x_max) of the series with the given coefficient prefix.

    Coefficients beyond the prefix are taken as zero, so x_max may exceed
    the prefix length.
    """
    if not coeffs:
        raise ValueError("values_from_coeffs requires a non-empty prefix")
    if x_max < 0:
        raise ValueError("values_from_coeffs requires x_max >= 0")
    return kernels.newton_values(list(coeffs), x_max)
