"""Maximal commutative subalgebras and the invariant that tells them apart.

Every maximal commutative subalgebra of E(n) has the shape
E_even + D with D an odd square-zero subspace equal to its own
orthogonal space under the skew pairing.  The largest possible
dimension follows a closed formula; two different maximal algebras of
the same dimension can be distinguished by the dimension of
rad/rad^2.

Run:  python3 demos/03_maximal_subalgebras.py
"""

from extalg import (
    analyze,
    canonical_max_commutative,
    hom_from_images,
    is_maximal_commutative,
    max_commutative_dim,
    odd_space,
    parse_element,
    perp,
    print_element,
    radical_quotient_dim,
    upper_levels_commutative,
)

print("largest commutative subalgebra dimension by n:")
for n in range(1, 9):
    print("  n=%d  dim=%d  (of 2^%d = %d)" % (n, max_commutative_dim(n), n, 2 ** n))

n = 4
a = canonical_max_commutative(n)
print("\ncanonical algebra at n=4, built on the odd monomials containing 1:")
for b in a.basis:
    print("   ", print_element(b))
print("  maximal commutative:", is_maximal_commutative(a))

d = a.intersect(odd_space(n))
print("  odd part dim %d, perp dim %d, self-perp: %s" % (d.dim, perp(d).dim, perp(d) == d))

# a second maximal algebra of the same dimension, built from upper levels
b4 = upper_levels_commutative(n)
print("\nupper-levels algebra at n=4: dim %d, maximal: %s" % (b4.dim, is_maximal_commutative(b4)))

print("\nthe radical quotient tells the two apart:")
print("  canonical     rad/rad^2 dim:", radical_quotient_dim(a))
print("  upper levels  rad/rad^2 dim:", radical_quotient_dim(b4))

# maximality survives algebra isomorphisms, including nongraded ones
shear = hom_from_images(
    [
        parse_element("v{1}+v{2,3,4}", 4),
        parse_element("v{2}", 4),
        parse_element("v{3}", 4),
        parse_element("v{4}", 4),
    ]
)
img = shear.apply_space(a)
print("\nimage under v1 -> v1 + v234 (bijective: %s):" % shear.is_bijective())
rep = analyze(img)
print("  dim %d, graded %s, maximal commutative %s" % (rep.dim, rep.graded, rep.maximal_commutative))
