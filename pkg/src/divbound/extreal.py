"""Extended nonnegative reals: plain floats plus ``math.inf``.

Divergences and bound functions take values in [0, inf].  IEEE doubles
already provide the required ordering (every finite value < inf) and
arithmetic (finite + inf = inf), so no wrapper type is used.  The
canonical textual form of positive infinity is ``"inf"`` in every input
and output of this package.
"""

from __future__ import annotations

import math

INF = math.inf


def is_finite(x: float) -> bool:
    return math.isfinite(x)


def parse_extended(text: str) -> float:
    """Parse a nonnegative extended real from text; ``"inf"`` means +infinity.

    NaN and negative infinity are rejected.  Finite negative numbers are
    returned as-is; domain checks belong to the operation consuming them.
    """
    s = str(text).strip()
    if s.lower() == "inf":
        return INF
    value = float(s)
    if math.isnan(value):
        raise ValueError(f"not a value: {text!r}")
    if value == -INF:
        raise ValueError("negative infinity is not a valid value")
    return value


def format_extended(x: float, precision: int = 9) -> str:
    """Render a value with the given number of significant digits, or ``"inf"``."""
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.{int(precision)}g}"
