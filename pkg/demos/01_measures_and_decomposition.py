"""Signed measures, the Hahn-Jordan decomposition, and total variation.

A signed measure on a finite support is just a weight per atom, with the
power set as the sigma-algebra.  Splitting it into nonnegative upper and
lower parts gives the variation measure and the total variation norm,
and for probability measures the same machinery produces the total
variation distance in three equivalent forms.
"""

import numpy as np

from divbound import (
    ProbabilityMeasure,
    SignedMeasure,
    hahn_jordan,
    subset_extrema,
    subset_totals,
    total_variation_norm,
    tv_distance,
    tv_via_density,
)

# A signed measure with one positive and two negative atoms.
nu = SignedMeasure(("a1", "a2", "a3"), [0.3, -0.1, -0.2])
print("signed measure:", dict(nu.items()))
print("total mass nu(support):", nu.total())

# The decomposition partitions the support: atoms with nonnegative weight
# form the positive set, the rest the negative set.
parts = hahn_jordan(nu)
print("positive set:", sorted(parts.positive_set))
print("negative set:", sorted(parts.negative_set))
print("upper part:", dict(parts.upper.items()))
print("lower part:", dict(parts.lower.items()))

# The upper part of any subset equals the best (largest) measure over its
# subsets; brute-force enumeration confirms it.
hi, lo = subset_extrema(nu)
print("sup over subsets:", hi, " matches upper total:", parts.upper.total())
print("inf over subsets:", lo, " matches -lower total:", -parts.lower.total())

# Total variation norm: mass of upper plus lower part, here 0.6.
print("total variation norm:", total_variation_norm(nu))

# For a balanced measure (total zero) the norm is exactly twice the
# largest |nu(B)| over subsets B.
balanced = SignedMeasure(("x1", "x2", "x3", "x4"), [0.4, -0.4, 0.1, -0.1])
totals = subset_totals(balanced)
print("balanced norm:", total_variation_norm(balanced),
      "= 2 * sup |nu(B)| =", 2.0 * float(np.abs(totals).max()))

# Probability measures: the same norm applied to mu - nu is the total
# variation distance, computable three ways.
mu = ProbabilityMeasure(("a1", "a2"), [0.5, 0.5])
rho = ProbabilityMeasure(("a1", "a2"), [0.25, 0.75])
print("L1 form:          ", tv_distance(mu, rho))
print("density form:     ", tv_via_density(mu, rho))
print("via norm of mu-nu:", total_variation_norm(mu - rho))
