"""Checks, algebra, and projection for integral difference ratios.

A table f(0..N) has integral difference ratios (IDR) on its prefix when
(a - b) divides f(a) - f(b) for every pair a > b.  The same property has a
coefficient-side characterization: writing f as a Newton series, the prefix
is IDR exactly when lcm(1..k) divides the k-th coefficient for every k.
Both routes are implemented and kept separate so they can cross-check each
other.
"""

from __future__ import annotations

from dataclasses import dataclass

from idrlab import kernels
from idrlab.arith import binom, lcm_table
from idrlab.newton import coeffs_from_values, values_from_coeffs


@dataclass(frozen=True)
class ViolationReport:
    """Outcome of a pairwise divisibility scan over a table prefix."""

    violation: tuple[int, int] | None
    pairs_checked: int

    @property
    def found(self) -> bool:
        return self.violation is not None


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of the coefficient-side lcm divisibility test."""

    failing_indices: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return not self.failing_indices


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    checks: int
    counterexample: tuple | None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


@dataclass(frozen=True)
class LemmaReport:
    lemmas: tuple[LemmaCheck, ...]

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.lemmas)


def check_idr_bruteforce(values: list[int]) -> ViolationReport:
    """Scan all pairs a > b in lexicographic (a, b) order.

    pairs_checked counts the scanned pairs: the full N*(N+1)/2 when the
    prefix passes, the position of the first violation otherwise.
    """
    if not values:
        raise ValueError("check_idr_bruteforce requires a non-empty table")
    hit = kernels.first_idr_violation(list(values))
    n = len(values) - 1
    if hit is None:
        return ViolationReport(None, n * (n + 1) // 2)
    a, b = hit
    return ViolationReport((a, b), a * (a - 1) // 2 + b + 1)


def check_idr_newton(values: list[int]) -> CriterionReport:
    """Coefficient-side test: report every k with lcm(1..k) not dividing a_k."""
    coeffs = coeffs_from_values(values)
    lcms = lcm_table(len(coeffs) - 1)
    failing = tuple(k for k, c in enumerate(coeffs) if c % lcms[k])
    return CriterionReport(failing)


def factorial_criterion(coeffs: list[int]) -> bool:
    """True when k! divides a_k for all k; sufficient for IDR, not necessary."""
    if not coeffs:
        raise ValueError("factorial_criterion requires a non-empty prefix")
    factorial = 1
    for k, c in enumerate(coeffs):
        if k:
            factorial *= k
        if c % factorial:
            return False
    return True


def verify_divisibility_lemmas(n_max: int) -> LemmaReport:
    """Exhaustive small-range check of the three divisibility facts behind
    the coefficient criterion.

    binomial_window:  p | lcm(k) * C(n, k)                 for 0 <= n-k < p <= n
    shift_difference: n | lcm(k) * (C(b+n, k) - C(b, k))   for k <= b
    pair_difference:  (a-b) | lcm(k) * (C(a, k) - C(b, k)) for k <= b <= a
    """
    if n_max < 1:
        raise ValueError("verify_divisibility_lemmas requires n_max >= 1")
    lcms = lcm_table(n_max)

    checks = 0
    window_hit = None
    for n in range(n_max + 1):
        for k in range(n + 1):
            value = lcms[k] * binom(n, k)
            for p in range(n - k + 1, n + 1):
                checks += 1
                if value % p:
                    window_hit = window_hit or (n, k, p)
    window = LemmaCheck("binomial_window", checks, window_hit)

    checks = 0
    shift_hit = None
    for k in range(n_max + 1):
        for b in range(k, n_max + 1):
            for n in range(1, n_max + 1):
                checks += 1
                if (lcms[k] * (binom(b + n, k) - binom(b, k))) % n:
                    shift_hit = shift_hit or (k, b, n)
    shift = LemmaCheck("shift_difference", checks, shift_hit)

    checks = 0
    pair_hit = None
    for k in range(n_max + 1):
        for b in range(k, n_max + 1):
            for a in range(b + 1, n_max + 1):
                checks += 1
                if (lcms[k] * (binom(a, k) - binom(b, k))) % (a - b):
                    pair_hit = pair_hit or (k, b, a)
    pair = LemmaCheck("pair_difference", checks, pair_hit)

    return LemmaReport((window, shift, pair))


def table_sum(f: list[int], g: list[int]) -> list[int]:
    """Pointwise sum over the common prefix length."""
    _require_same_length(f, g)
    return [x + y for x, y in zip(f, g)]


def table_product(f: list[int], g: list[int]) -> list[int]:
    """Pointwise product over the common prefix length."""
    _require_same_length(f, g)
    return [x * y for x, y in zip(f, g)]


def table_compose(f: list[int], g: list[int]) -> list[int]:
    """Composition table (f o g)(x) = f[g[x]]; g must land inside f's prefix."""
    if not f or not g:
        raise ValueError("table_compose requires non-empty tables")
    out = []
    for x, inner in enumerate(g):
        if not 0 <= inner < len(f):
            raise ValueError(
                f"composition value g[{x}] = {inner} is outside the outer "
                f"table of length {len(f)}"
            )
        out.append(f[inner])
    return out


def project_idr(values: list[int]) -> list[int]:
    """Nearest-below IDR table: drop every coefficient to the lcm multiple
    directly at or below it (floored division), then re-evaluate.

    The result g satisfies the coefficient criterion and never exceeds the
    input table on its prefix.
    """
    coeffs = coeffs_from_values(values)
    lcms = lcm_table(len(coeffs) - 1)
    projected = [lcms[k] * (c // lcms[k]) for k, c in enumerate(coeffs)]
    return values_from_coeffs(projected, len(values) - 1)


def preimage_finiteness_probe(values: list[int], z: int) -> int:
    """Number of positions in the tabulated prefix where the table hits z."""
    if not values:
        raise ValueError("preimage_finiteness_probe requires a non-empty table")
    return sum(1 for v in values if v == z)


def _require_same_length(f: list[int], g: list[int]) -> None:
    if not f or not g:
        raise ValueError("table algebra requires non-empty tables")
    if len(f) != len(g):
        raise ValueError(
            f"table length mismatch: {len(f)} versus {len(g)}"
        )
