"""Backend selection for the integer kernels.

Prefers the compiled extension, falls back to the pure-Python module.
`BACKEND` records which one won so callers (and the benchmark) can tell.
"""

from __future__ import annotations

from idrlab import _fallback

try:
    from idrlab import _speedups as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on the build environment
    _impl = _fallback
    BACKEND = "pure"

forward_difference_coeffs = _impl.forward_difference_coeffs
newton_values = _impl.newton_values
first_idr_violation = _impl.first_idr_violation


def available_backends() -> dict:
    """Importable kernel modules keyed by name; always includes 'pure'."""
    found = {"pure": _fallback}
    if BACKEND == "compiled":
        found["compiled"] = _impl
    return found
