"""Resolution of the lost-edge-count thresholds of the improved algorithms."""

from __future__ import annotations

import math

from .errors import UsageError

__all__ = ["streett_threshold", "mec_threshold"]


def _parse(value):
    if isinstance(value, int):
        if value < 1:
            raise UsageError("threshold must be a positive integer")
        return value
    return None


def streett_threshold(value, n: int, m: int) -> int:
    """Threshold for the fairness algorithms.

    ``auto`` is ``ceil(sqrt(m / log2 n))``, the asymptotically optimal
    choice; ``practical`` is ``ceil(2 * log2 n)``, a lower value that
    favors the lock-step path on instances with few pairs.  Logarithms
    are binary and `n` is clamped to at least 2.
    """
    fixed = _parse(value)
    if fixed is not None:
        return fixed
    log_n = math.log2(max(n, 2))
    if value == "auto":
        return max(1, math.ceil(math.sqrt(m / log_n)))
    if value == "practical":
        return max(1, math.ceil(2 * log_n))
    raise UsageError(f"bad threshold {value!r}")


def mec_threshold(value, n: int, m: int) -> int:
    """Threshold for end-component decomposition: ``auto`` is ``ceil(sqrt(m))``."""
    fixed = _parse(value)
    if fixed is not None:
        return fixed
    if value == "auto":
        return max(1, math.ceil(math.sqrt(m)))
    if value == "practical":
        return max(1, math.ceil(2 * math.log2(max(n, 2))))
    raise UsageError(f"bad threshold {value!r}")
