"""Shared builders and hypothesis strategies for the test suite."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from divbound import ProbabilityMeasure, SignedMeasure


def atoms(n: int) -> tuple[str, ...]:
    return tuple(f"a{i + 1}" for i in range(n))


def sm(*weights: float) -> SignedMeasure:
    return SignedMeasure(atoms(len(weights)), np.array(weights, dtype=np.float64))


def pm(*weights: float) -> ProbabilityMeasure:
    return ProbabilityMeasure(atoms(len(weights)), np.array(weights, dtype=np.float64))


def pm_normalized(*raw: float) -> ProbabilityMeasure:
    w = np.array(raw, dtype=np.float64)
    return ProbabilityMeasure(atoms(len(raw)), w / w.sum())


finite_weights = st.floats(
    min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False
)

positive_weights = st.floats(
    min_value=1e-3, max_value=10.0, allow_nan=False, allow_infinity=False
)


@st.composite
def signed_measures(draw, min_atoms: int = 1, max_atoms: int = 8) -> SignedMeasure:
    ws = draw(st.lists(finite_weights, min_size=min_atoms, max_size=max_atoms))
    return sm(*ws)


@st.composite
def balanced_signed_measures(draw, max_pairs: int = 5) -> SignedMeasure:
    """Signed measures with exact zero total: permuted blocks of (v, -v) pairs.

    Positives and negatives appear in the same block order, so the upper
    and lower parts accumulate along identical rounding paths; the exact
    identity norm = 2 sup |nu(B)| depends on that.
    """
    vs = draw(st.lists(positive_weights, min_size=1, max_size=max_pairs))
    flips = draw(st.lists(st.booleans(), min_size=len(vs), max_size=len(vs)))
    order = draw(st.permutations(list(range(len(vs)))))
    ws: list[float] = []
    for i in order:
        ws.extend([-vs[i], vs[i]] if flips[i] else [vs[i], -vs[i]])
    return sm(*ws)


@st.composite
def probability_pairs(draw, min_atoms: int = 2, max_atoms: int = 8):
    """Aligned pairs (mu, nu) with strictly positive nu (so mu << nu)."""
    n = draw(st.integers(min_atoms, max_atoms))
    raw_mu = draw(st.lists(positive_weights, min_size=n, max_size=n))
    raw_nu = draw(st.lists(positive_weights, min_size=n, max_size=n))
    return pm_normalized(*raw_mu), pm_normalized(*raw_nu)


@st.composite
def probability_triples(draw, min_atoms: int = 2, max_atoms: int = 6):
    n = draw(st.integers(min_atoms, max_atoms))
    rows = [
        draw(st.lists(positive_weights, min_size=n, max_size=n)) for _ in range(3)
    ]
    return tuple(pm_normalized(*row) for row in rows)
