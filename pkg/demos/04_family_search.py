"""Odd intersecting families: the combinatorial side of the dimension formula.

A monomial square-zero subspace of the odd part is the same thing as an
intersecting family of odd subsets of {1..n}.  An independent
branch-and-bound search over those families certifies the closed
formula for the maximal commutative dimension: it always equals
2^(n-1) + (largest family size).

Run:  python3 demos/04_family_search.py
"""

import math

from extalg import (
    assemble,
    ekr_max,
    enumerate_max_odd_intersecting,
    family_space,
    is_maximal_commutative,
    is_square_zero,
    max_commutative_dim,
    max_odd_intersecting,
    two_level_max,
)

print("search vs formula:")
for n in range(1, 8):
    res = max_odd_intersecting(n)
    total = 2 ** (n - 1) + res.size
    mark = "ok" if total == max_commutative_dim(n) else "MISMATCH"
    print("  n=%d  family %2d  2^%d + %2d = %3d  %s" % (n, res.size, n - 1, res.size, total, mark))

print("\nall maximum families at n=3 (three stars, each with the full set):")
for fam in enumerate_max_odd_intersecting(3):
    print("  ", fam.to_sets())

print("\nat n=5 the maximum family is unique: every odd set of size > 5/2")
(top,) = enumerate_max_odd_intersecting(5)
print("  ", top.to_sets())

# the span of a maximum family assembles into a maximal commutative algebra
res6 = max_odd_intersecting(6)
d6 = family_space(res6.family)
a6 = assemble(d6)
print("\nn=6 certificate: family size %d, span square-zero %s" % (res6.size, is_square_zero(d6)))
print("  assembled algebra: dim %d (formula %d), maximal %s"
      % (a6.dim, max_commutative_dim(6), is_maximal_commutative(a6)))

print("\nsingle-level maxima match the classical star bound binom(n-1,k-1):")
for n in (6, 7, 8):
    row = ["C(%d,%d)-families: %d" % (n, k, ekr_max(n, k)) for k in range(1, n // 2 + 1)]
    print("  n=%d  %s" % (n, "  ".join(row)))

print("\ntwo-level families (singletons plus co-doubles) at odd n:")
for n in (5, 7):
    print("  n=%d  max %d  (the full upper level has %d sets)" % (n, two_level_max(n, 1), math.comb(n, n - 2)))
