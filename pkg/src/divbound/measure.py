"""Finite-support signed and probability measures.

A measure assigns a real weight to each atom of a finite support; the
sigma-algebra is the power set of the atoms.  This module provides the
Hahn-Jordan split of a signed measure into nonnegative upper and lower
parts, the total variation norm, and three equivalent forms of the total
variation distance between probability measures: the L1 form
sum_i |mu_i - nu_i|, the set form 2 sup_B |mu(B) - nu(B)| (via subset
enumeration, small supports only), and the density form
sum_i nu_i |mu_i/nu_i - 1|.

All values are immutable after construction and every operation is pure,
so they are safe to share between concurrent tasks.

Binary operations align supports on the union of atom ids; atoms missing
from one measure count as weight 0.  Sums over atoms accumulate in atom
order, which lets the subset enumeration oracle reproduce them bit for
bit.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    AbsoluteContinuityViolation,
    DomainError,
    InvalidMeasure,
    MeasureFormatError,
)

PROBABILITY_SUM_TOL = 1e-9

# Enumerating 2**n subsets is an oracle for tests, not a production path.
ENUMERATION_CAP = 20


@dataclass(frozen=True, eq=False)
class SignedMeasure:
    """A finite-support set function with one finite real weight per atom."""

    atoms: tuple[str, ...]
    weights: np.ndarray

    def __post_init__(self) -> None:
        atoms = tuple(str(a) for a in self.atoms)
        try:
            weights = np.array(self.weights, dtype=np.float64)
        except (TypeError, ValueError) as exc:
            raise InvalidMeasure(f"weights must be real numbers: {exc}") from None
        if weights.ndim != 1 or weights.size != len(atoms):
            raise InvalidMeasure("need exactly one weight per atom")
        if len(set(atoms)) != len(atoms):
            raise InvalidMeasure("atom ids must be unique within a measure")
        if not np.all(np.isfinite(weights)):
            raise InvalidMeasure("weights must be finite")
        weights.setflags(write=False)
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(atoms)})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, float]]) -> "SignedMeasure":
        pairs = list(pairs)
        return cls(tuple(p[0] for p in pairs), np.array([p[1] for p in pairs], dtype=np.float64))

    def __len__(self) -> int:
        return len(self.atoms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedMeasure):
            return NotImplemented
        return self.atoms == other.atoms and np.array_equal(self.weights, other.weights)

    __hash__ = None  # compared by value, not meant for hashing

    def items(self) -> Iterator[tuple[str, float]]:
        for a, w in zip(self.atoms, self.weights):
            yield a, float(w)

    def weight(self, atom: str) -> float:
        """Weight of one atom; atoms outside the support carry weight 0."""
        i = self._index.get(atom)
        return 0.0 if i is None else float(self.weights[i])

    def total(self, within: Iterable[str] | None = None) -> float:
        """Measure of a subset of the support (the whole support by default)."""
        if within is None:
            selected = self.weights
        else:
            keys = set(within)
            selected = [w for a, w in zip(self.atoms, self.weights) if a in keys]
        # plain accumulation in atom order; see module docstring
        acc = 0.0
        for w in selected:
            acc += float(w)
        return acc

    def __sub__(self, other: "SignedMeasure") -> "SignedMeasure":
        if not isinstance(other, SignedMeasure):
            return NotImplemented
        ids, a, b = align(self, other)
        return SignedMeasure(ids, a - b)

    def to_json_dict(self) -> dict:
        return {"atoms": [{"id": a, "w": float(w)} for a, w in self.items()]}

    @classmethod
    def from_json_dict(cls, data: object) -> "SignedMeasure":
        return cls.from_pairs(_pairs_from_json_dict(data))


@dataclass(frozen=True, eq=False)
class ProbabilityMeasure(SignedMeasure):
    """A measure with nonnegative weights summing to one (within 1e-9).

    Construction never renormalizes silently; use :meth:`normalized` to
    build a probability measure from unnormalized nonnegative weights.
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        if np.any(self.weights < 0.0):
            raise InvalidMeasure("probability weights must be nonnegative")
        if abs(self.total() - 1.0) > PROBABILITY_SUM_TOL:
            raise InvalidMeasure(
                f"probability weights must sum to 1 within {PROBABILITY_SUM_TOL}, "
                f"got {self.total()!r}"
            )

    @classmethod
    def normalized(cls, pairs: Iterable[tuple[str, float]]) -> "ProbabilityMeasure":
        """Divide nonnegative weights by their sum; total mass must be positive."""
        pairs = list(pairs)
        weights = np.array([p[1] for p in pairs], dtype=np.float64)
        if np.any(weights < 0.0) or not np.all(np.isfinite(weights)):
            raise InvalidMeasure("normalize needs finite nonnegative weights")
        mass = weights.sum()
        if not mass > 0.0:
            raise InvalidMeasure("normalize needs positive total mass")
        return cls(tuple(p[0] for p in pairs), weights / mass)


@dataclass(frozen=True)
class HahnDecomposition:
    """Partition of the support plus the nonnegative upper and lower parts.

    ``upper`` is supported on ``positive_set``, ``lower`` on
    ``negative_set``, and the original measure is upper - lower atomwise.
    """

    positive_set: frozenset[str]
    negative_set: frozenset[str]
    upper: SignedMeasure
    lower: SignedMeasure

    def __post_init__(self) -> None:
        support = set(self.upper.atoms)
        if self.positive_set | self.negative_set != support or self.positive_set & self.negative_set:
            raise InvalidMeasure("positive and negative sets must partition the support")
        if self.upper.atoms != self.lower.atoms:
            raise InvalidMeasure("upper and lower parts must share the support")
        if np.any(self.upper.weights < 0.0) or np.any(self.lower.weights < 0.0):
            raise InvalidMeasure("upper and lower parts must be nonnegative")
        for atom, w in self.upper.items():
            if w != 0.0 and atom not in self.positive_set:
                raise InvalidMeasure("upper part must vanish outside the positive set")
        for atom, w in self.lower.items():
            if w != 0.0 and atom not in self.negative_set:
                raise InvalidMeasure("lower part must vanish outside the negative set")


def align(
    a: SignedMeasure, b: SignedMeasure
) -> tuple[tuple[str, ...], np.ndarray, np.ndarray]:
    """Weights of both measures on the union support, missing atoms as 0.

    The union keeps the atom order of ``a`` followed by the atoms that
    appear only in ``b``, in their order.
    """
    if a.atoms == b.atoms:
        return a.atoms, a.weights, b.weights
    ids = list(a.atoms) + [x for x in b.atoms if x not in a._index]
    wa = np.array([a.weight(x) for x in ids], dtype=np.float64)
    wb = np.array([b.weight(x) for x in ids], dtype=np.float64)
    return tuple(ids), wa, wb


def hahn_jordan(nu: SignedMeasure) -> HahnDecomposition:
    """Split a signed measure into nonnegative upper and lower parts.

    Atoms of weight exactly 0 go to the positive set; any assignment of
    null atoms is valid, and a fixed rule keeps results reproducible.
    The upper part clamps negative weights to 0, the lower part negates
    and clamps positive weights, so ``nu == upper - lower`` atomwise and
    ``upper(A)`` equals the maximum of ``nu`` over subsets of ``A``.
    """
    w = nu.weights
    nonneg = w >= 0.0
    upper = SignedMeasure(nu.atoms, np.where(nonneg, w, 0.0))
    lower = SignedMeasure(nu.atoms, np.where(nonneg, 0.0, -w))
    positive = frozenset(a for a, keep in zip(nu.atoms, nonneg) if keep)
    negative = frozenset(a for a, keep in zip(nu.atoms, nonneg) if not keep)
    return HahnDecomposition(positive, negative, upper, lower)


def total_variation_norm(nu: SignedMeasure) -> float:
    """Total mass of the variation measure: upper(support) + lower(support)."""
    parts = hahn_jordan(nu)
    return parts.upper.total() + parts.lower.total()


def tv_distance(mu: ProbabilityMeasure, nu: ProbabilityMeasure) -> float:
    """Total variation distance sum_i |mu_i - nu_i|, in [0, 2].

    Equals twice the largest discrepancy |mu(B) - nu(B)| over subsets B.
    """
    _, a, b = align(mu, nu)
    acc = 0.0
    for x, y in zip(a, b):
        acc += abs(float(x) - float(y))
    return acc


def tv_via_density(mu: ProbabilityMeasure, nu: ProbabilityMeasure) -> float:
    """Total variation computed through the density: sum_i nu_i |mu_i/nu_i - 1|.

    Requires mu absolutely continuous with respect to nu; equal to
    :func:`tv_distance` whenever it is defined.
    """
    ids, a, b = align(mu, nu)
    acc = 0.0
    for atom, mi, ni in zip(ids, a, b):
        ni = float(ni)
        mi = float(mi)
        if ni > 0.0:
            acc += ni * abs(mi / ni - 1.0)
        elif mi > 0.0:
            raise AbsoluteContinuityViolation(atom)
    return acc


def subset_totals(nu: SignedMeasure, within: Iterable[str] | None = None) -> np.ndarray:
    """Measure of every subset of the (restricted) support, testing oracle.

    Entry ``m`` is the measure of the subset whose members are the atoms
    at the set bit positions of ``m`` (bit i = i-th selected atom, in
    measure order).  Each entry is accumulated in atom order, matching
    :meth:`SignedMeasure.total` exactly.  Capped at supports of at most
    ``ENUMERATION_CAP`` atoms.
    """
    if within is None:
        weights = nu.weights
    else:
        keys = set(within)
        weights = np.array(
            [w for a, w in zip(nu.atoms, nu.weights) if a in keys], dtype=np.float64
        )
    if weights.size > ENUMERATION_CAP:
        raise DomainError(
            f"subset enumeration is capped at {ENUMERATION_CAP} atoms, got {weights.size}"
        )
    sums = np.zeros(1, dtype=np.float64)
    for w in weights:
        sums = np.concatenate([sums, sums + w])
    return sums


def subset_extrema(
    nu: SignedMeasure, within: Iterable[str] | None = None
) -> tuple[float, float]:
    """Largest and smallest measure over all subsets of ``within``."""
    sums = subset_totals(nu, within)
    return float(sums.max()), float(sums.min())


# ---------------------------------------------------------------------------
# file formats: JSON {"atoms": [{"id": ..., "w": ...}]} and CSV "id,w"
# ---------------------------------------------------------------------------


def _reject_constant(token: str) -> float:
    raise MeasureFormatError(f"non-finite weight token {token!r} is not allowed")


def _pairs_from_json_dict(data: object) -> list[tuple[str, float]]:
    if not isinstance(data, dict) or not isinstance(data.get("atoms"), list):
        raise MeasureFormatError('expected a JSON object {"atoms": [...]}')
    pairs: list[tuple[str, float]] = []
    for entry in data["atoms"]:
        if not isinstance(entry, dict) or set(entry) != {"id", "w"}:
            raise MeasureFormatError('each atom must be an object {"id": ..., "w": ...}')
        atom, w = entry["id"], entry["w"]
        if not isinstance(atom, str):
            raise MeasureFormatError(f"atom id must be a string, got {atom!r}")
        if isinstance(w, bool) or not isinstance(w, (int, float)):
            raise MeasureFormatError(f"weight of atom {atom!r} must be a number")
        if not math.isfinite(float(w)):
            raise MeasureFormatError(f"weight of atom {atom!r} must be finite")
        pairs.append((atom, float(w)))
    return pairs


def _pairs_from_csv_text(text: str) -> list[tuple[str, float]]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [c.strip() for c in rows[0]] != ["id", "w"]:
        raise MeasureFormatError('CSV measures need the header row "id,w"')
    pairs: list[tuple[str, float]] = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != 2:
            raise MeasureFormatError(f"line {lineno}: expected two columns, got {len(row)}")
        atom = row[0].strip()
        try:
            w = float(row[1])
        except ValueError:
            raise MeasureFormatError(f"line {lineno}: weight {row[1]!r} is not a number") from None
        if not math.isfinite(w):
            raise MeasureFormatError(f"line {lineno}: weight must be finite")
        pairs.append((atom, w))
    return pairs


def _pairs_from_text(text: str, suffix: str) -> list[tuple[str, float]]:
    if suffix == ".csv":
        return _pairs_from_csv_text(text)
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise MeasureFormatError(f"invalid JSON: {exc}") from None
    return _pairs_from_json_dict(data)


def read_signed_measure(path: str | Path) -> SignedMeasure:
    """Load a signed measure from a JSON or CSV file (picked by extension)."""
    path = Path(path)
    return SignedMeasure.from_pairs(_pairs_from_text(path.read_text(), path.suffix.lower()))


def read_probability_measure(path: str | Path) -> ProbabilityMeasure:
    """Load a probability measure from a JSON or CSV file (picked by extension)."""
    path = Path(path)
    return ProbabilityMeasure.from_pairs(_pairs_from_text(path.read_text(), path.suffix.lower()))
