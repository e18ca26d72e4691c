"""Convex generator functions defining f-divergences.

A generator is a convex function f on [0, inf) with f(1) = 0.  Each one
carries its limit at 0+ as stored metadata (evaluating x*log(x) or
-log(x) at 0 in floating point would produce NaN or raise) and, when one
exists, a separation coefficient a: a real number such that
g(x) = f(x) - a*(x - 1) is nonnegative and vanishes only at x = 1.  A
generator with such a coefficient yields a divergence that separates
measures: divergence zero forces the measures to be equal.

Convexity and separation are validated numerically on sample grids; this
module checks, it does not prove.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .errors import DomainError, UnknownGenerator

BUILTIN_NAMES = ("HE", "TV", "KL", "PE", "SH")


@dataclass(frozen=True)
class Generator:
    """A convex function on [0, inf) vanishing at 1, with metadata.

    ``fn`` only ever sees strictly positive arguments; calls at 0 return
    ``value_at_zero``.  Built-in ``fn`` implementations accept numpy
    arrays as well as scalars.
    """

    name: str
    fn: Callable[[float], float]
    value_at_zero: float
    separation_coefficient: float | None = None

    def __post_init__(self) -> None:
        if float(self.fn(1.0)) != 0.0:
            raise DomainError(f"generator {self.name!r} must vanish at 1")

    def __call__(self, x: float) -> float:
        x = float(x)
        if math.isnan(x) or x < 0.0:
            raise DomainError(f"generator {self.name!r} is defined on [0, inf), got {x!r}")
        if x == 0.0:
            return float(self.value_at_zero)
        return float(self.fn(x))

    def eval_array(self, x: np.ndarray) -> np.ndarray:
        """Evaluate elementwise; zeros map to ``value_at_zero``."""
        x = np.asarray(x, dtype=np.float64)
        if np.any(np.isnan(x)) or np.any(x < 0.0):
            raise DomainError(f"generator {self.name!r} is defined on [0, inf)")
        out = np.empty_like(x)
        zero = x == 0.0
        out[zero] = self.value_at_zero
        pos = ~zero
        if pos.any():
            xp = x[pos]
            try:
                with np.errstate(all="ignore"):
                    values = np.asarray(self.fn(xp), dtype=np.float64)
                if values.shape != xp.shape:
                    raise TypeError
            except (TypeError, ValueError):
                # scalar-only user function
                values = np.array([float(self.fn(float(v))) for v in xp])
            out[pos] = values
        return out


def _hellinger(x):
    return (np.sqrt(x) - 1.0) ** 2


def _total_variation(x):
    return np.abs(x - 1.0)


def _kullback_leibler(x):
    return x * np.log(x)


def _pearson(x):
    return (x - 1.0) ** 2


def _shannon(x):
    return -np.log(x)


_BUILTINS: dict[str, Generator] = {
    "HE": Generator("HE", _hellinger, 1.0, 0.0),
    "TV": Generator("TV", _total_variation, 1.0, None),
    "KL": Generator("KL", _kullback_leibler, 0.0, 1.0),
    "PE": Generator("PE", _pearson, 1.0, 0.0),
    "SH": Generator("SH", _shannon, math.inf, -1.0),
}


def builtin(name: str) -> Generator:
    """Look up a built-in generator by (case-insensitive) name.

    HE  (sqrt(x) - 1)^2   Hellinger                 f(0) = 1, a = 0
    TV  |x - 1|           total variation           f(0) = 1, no coefficient
    KL  x log x           Kullback-Leibler (nats)   f(0) = 0, a = 1
    PE  (x - 1)^2         Pearson chi-square        f(0) = 1, a = 0
    SH  -log x            reverse KL / Shannon      f(0) = inf, a = -1

    SH is the dual of KL.  TV stores no separation coefficient: it
    separates measures through the metric property of the distance, not
    through a coefficient, and no claim is attached to one.
    """
    key = str(name).upper()
    try:
        return _BUILTINS[key]
    except KeyError:
        raise UnknownGenerator(
            f"unknown generator {name!r}; choose one of {', '.join(BUILTIN_NAMES)}"
        ) from None


def is_builtin(f: Generator) -> bool:
    return _BUILTINS.get(f.name.upper()) is f


def dual(
    f: Generator, *, name: str | None = None, value_at_zero: float | None = None
) -> Generator:
    """The conjugate generator x -> x*f(1/x), which swaps divergence arguments.

    The limit at 0+ is probed by evaluating at x = 1e-12 and rounding to
    +inf above 1e10; that heuristic can miss slowly diverging limits
    (x*f(1/x) = -log x reaches only ~27.6 at the probe), so exact
    metadata can be supplied through ``value_at_zero``.  When ``f`` has a
    separation coefficient a, the dual has coefficient -a, because
    x*f(1/x) + a*(x - 1) = x*g(1/x) inherits positivity from g.
    """

    def conjugate(x):
        if isinstance(x, np.ndarray):
            return x * f.eval_array(1.0 / x)
        return x * f(1.0 / x)

    if value_at_zero is None:
        probe = 1e-12 * f(1e12)
        value_at_zero = math.inf if probe > 1e10 else probe
    a = f.separation_coefficient
    return Generator(
        name if name is not None else f"{f.name}*",
        conjugate,
        float(value_at_zero),
        None if a is None else -a,
    )


def default_grid(stop: float = 10.0, step: float = 0.01) -> np.ndarray:
    """The sample grid {0, step, 2*step, ..., stop} used by the checks."""
    count = int(round(stop / step)) + 1
    return np.linspace(0.0, stop, count)


def check_separation(f: Generator, a: float, grid: Iterable[float]) -> bool:
    """Grid-check that g(x) = f(x) - a*(x - 1) is nonnegative and vanishes only near 1.

    True iff g >= -1e-12 everywhere on the grid and g > 1e-12 at every
    grid point with |x - 1| >= 1e-3.
    """
    a = float(a)
    for x in grid:
        x = float(x)
        g = f(x) - a * (x - 1.0)
        if g < -1e-12:
            return False
        if abs(x - 1.0) >= 1e-3 and not g > 1e-12:
            return False
    return True
