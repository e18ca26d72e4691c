"""Empirical verification of the divergence lower bound, and its tightness.

Brute-force oracles on small alphabets: seeded random measure pairs,
exhaustive scans of binary (two-atom) pairs, soundness sweeps of the
bound over many random pairs, and grid searches for the largest total
variation actually attainable at a given divergence budget.  Everything
is deterministic per seed; trials are independent, and the report merge
(max plus argmax) is associative, so callers may parallelize without
changing results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Iterable

import numpy as np

from .bounds import invert, lower_bound, phi
from .divergence import d_f
from .errors import DomainError
from .extreal import format_extended
from .generator import Generator
from .measure import ProbabilityMeasure, tv_distance

_NU_FLOOR = 1e-9
_SEED_LIMIT = 1 << 128
_TRIAL_STRIDE = 1 << 64


@dataclass(frozen=True)
class ScanRecord:
    """One binary-alphabet sample of the two sides of the bound.

    ``slack`` is divergence minus lower bound; soundness means it is
    never below -1e-9.
    """

    p: float
    q: float
    tv: float
    divergence: float
    lower_bound: float
    slack: float


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a soundness sweep over seeded random pairs."""

    generator_name: str
    trials: int
    max_violation: float
    worst_pair: tuple[ProbabilityMeasure, ProbabilityMeasure]
    seed: int

    @property
    def passed(self) -> bool:
        return self.max_violation <= 1e-9

    def to_json_dict(self, precision: int | None = None) -> dict:
        def encode(x: float):
            if math.isinf(x):
                return "inf"
            if precision is not None:
                return float(f"{x:.{precision}g}")
            return float(x)

        mu, nu = self.worst_pair
        return {
            "generator": self.generator_name,
            "trials": self.trials,
            "max_violation": encode(self.max_violation),
            "seed": self.seed,
            "passed": self.passed,
            "worst_pair": {"mu": mu.to_json_dict(), "nu": nu.to_json_dict()},
        }


def random_pair(n: int, seed: int) -> tuple[ProbabilityMeasure, ProbabilityMeasure]:
    """Two seeded random probability measures on the same n atoms.

    Weights are normalized exponential variates from a counter-based
    (Philox) stream, so results are reproducible across platforms and
    depend only on (n, seed).  The second measure is floored at 1e-9 per
    atom and renormalized, guaranteeing strictly positive weights and
    hence absolute continuity of the first measure with respect to it.
    """
    n = int(n)
    if n < 2:
        raise DomainError(f"support size must be at least 2, got {n}")
    seed = int(seed)
    if not 0 <= seed < _SEED_LIMIT:
        raise DomainError("seed must be an unsigned integer below 2**128")
    rng = np.random.Generator(np.random.Philox(key=seed))
    raw = rng.standard_exponential(2 * n, method="inv")
    mu_w = raw[:n] / raw[:n].sum()
    nu_w = np.maximum(raw[n:] / raw[n:].sum(), _NU_FLOOR)
    nu_w = np.maximum(nu_w / nu_w.sum(), _NU_FLOOR)
    atoms = tuple(f"a{i + 1}" for i in range(n))
    return ProbabilityMeasure(atoms, mu_w), ProbabilityMeasure(atoms, nu_w)


def _binary_divergence(f: Generator, p: float, q: float) -> float:
    # Bernoulli(p) against Bernoulli(q), q interior; matches d_f termwise.
    return q * f(p / q) + (1.0 - q) * f((1.0 - p) / (1.0 - q))


def _open_grid(resolution: int) -> list[float]:
    return [(i + 1) / (resolution + 1.0) for i in range(resolution)]


def scan_binary(f: Generator, resolution: int) -> list[ScanRecord]:
    """Sample both sides of the bound on a uniform open grid of Bernoulli pairs.

    Iterates p and q over ``resolution`` interior points of (0, 1) and
    records tv = 2|p - q|, the divergence, the bound phi(tv/2), and the
    slack between them.
    """
    resolution = int(resolution)
    if resolution < 2:
        raise DomainError("resolution must be at least 2")
    grid = _open_grid(resolution)
    records: list[ScanRecord] = []
    for p in grid:
        for q in grid:
            t = 2.0 * abs(p - q)
            div = _binary_divergence(f, p, q)
            floor = phi(f, t / 2.0)
            if math.isinf(div) and math.isinf(floor):
                slack = 0.0
            else:
                slack = div - floor
            records.append(ScanRecord(p, q, t, div, floor, slack))
    return records


def verify_bound(
    f: Generator, trials: int, max_support: int, seed: int
) -> VerificationReport:
    """Soundness sweep: the bound never exceeds the divergence, over random pairs.

    Draws ``trials`` pairs with support sizes cycling over 2..max_support
    and reports the largest value of (lower bound - divergence) seen,
    together with the pair attaining it.  Infinite divergences satisfy
    the bound trivially and count as violation 0.  Trial k uses the
    derived stream key seed + k * 2**64, so the report depends only on
    (generator, trials, max_support, seed).
    """
    trials = int(trials)
    max_support = int(max_support)
    if trials < 1:
        raise DomainError("trials must be at least 1")
    if max_support < 2:
        raise DomainError("max_support must be at least 2")
    seed = int(seed)
    if not 0 <= seed < _TRIAL_STRIDE:
        raise DomainError("seed must be an unsigned integer below 2**64")
    worst = -math.inf
    worst_pair: tuple[ProbabilityMeasure, ProbabilityMeasure] | None = None
    for k in range(trials):
        n = 2 + k % (max_support - 1)
        mu, nu = random_pair(n, seed + k * _TRIAL_STRIDE)
        div = d_f(f, mu, nu).value
        if math.isinf(div):
            violation = 0.0
        else:
            violation = lower_bound(f, tv_distance(mu, nu)) - div
        if violation > worst:
            worst = violation
            worst_pair = (mu, nu)
    assert worst_pair is not None
    return VerificationReport(f.name, trials, worst, worst_pair, seed)


def tightness_gap(
    f: Generator, d_target: float, resolution: int
) -> tuple[float, float, float]:
    """How far the certified bound sits above the binary-alphabet frontier.

    Returns ``(certified_tv, achieved_tv, gap)`` where certified_tv is
    the inverted bound at ``d_target``, achieved_tv is the largest total
    variation over a ``resolution``-per-axis open grid of Bernoulli pairs
    whose divergence stays within ``d_target``, and gap is their
    difference.  Soundness makes the gap nonnegative up to grid and
    bisection resolution.
    """
    d_target = float(d_target)
    if math.isnan(d_target) or math.isinf(d_target) or d_target < 0.0:
        raise DomainError(f"divergence budget must be finite and nonnegative, got {d_target!r}")
    resolution = int(resolution)
    if resolution < 2:
        raise DomainError("resolution must be at least 2")
    certified = invert(f, d_target).tv_upper_bound
    qs = np.array(_open_grid(resolution))
    achieved = 0.0
    for p in qs:
        with np.errstate(all="ignore"):
            div = qs * f.eval_array(p / qs) + (1.0 - qs) * f.eval_array((1.0 - p) / (1.0 - qs))
        feasible = div <= d_target
        if feasible.any():
            achieved = max(achieved, float(np.max(2.0 * np.abs(p - qs[feasible]))))
    return certified, achieved, certified - achieved


def scan_to_csv(records: Iterable[ScanRecord], stream: IO[str], precision: int = 9) -> None:
    """Write scan records as CSV with columns p,q,tv,divergence,lower_bound,slack."""
    stream.write("p,q,tv,divergence,lower_bound,slack\n")
    for r in records:
        row = (r.p, r.q, r.tv, r.divergence, r.lower_bound, r.slack)
        stream.write(",".join(format_extended(x, precision) for x in row) + "\n")
