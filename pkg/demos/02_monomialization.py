"""Monomializing subspaces with generator splits.

The split at generator i sends a subspace D to ker(s_i|D) + s_i(D),
where s_i substitutes 0 for v_i.  Chaining the splits over all
generators always lands on a monomial-spanned subspace of the same
dimension, and for the written generator order the result is exactly
the span of the initial monomials.

Run:  python3 demos/02_monomialization.py
"""

from itertools import combinations

from extalg import (
    initial_span,
    monomial_supports,
    monomialize,
    parse_element,
    print_element,
    span,
    split_generator,
)


def show(title, s):
    print("%s (dim %d)" % (title, s.dim))
    for b in s.basis:
        print("   ", print_element(b))


# the order of splits matters: the two chains on E(2) disagree
d = span([parse_element("v{1}+v{2}", 2)])
show("D = span{v1+v2}", d)
show("chain order 1,2", monomialize(d, [1, 2]))
show("chain order 2,1", monomialize(d, [2, 1]))

# a single split in slow motion
print("\nsplit of D at generator 1:")
show("  gamma_1(D)", split_generator(d, 1))

# the identity-order chain recovers the initial span read off pivots
e = span([parse_element(s, 6) for s in ["v{1,2,3}+v{4,5,6}", "v{1,2,4}+v{3,5,6}"]])
show("\nE in E(6)", e)
show("identity chain", monomialize(e))
show("initial span", initial_span(e))
print("families:")
print("  identity order   ", monomial_supports(e).to_sets())
print("  order 1,2,6,4,5,3", monomial_supports(e, [1, 2, 6, 4, 5, 3]).to_sets())

# sums over whole degree levels produce nested flags, whatever the order
n = 5
rows = []
for k in range(1, n + 1):
    terms = "+".join("v{%s}" % ",".join(map(str, c)) for c in combinations(range(1, n + 1), k))
    rows.append(parse_element(terms, n))
flag_input = span(rows, n=n)
print("\nlevel sums in E(5), three orders, always a flag:")
for order in ([1, 2, 3, 4, 5], [5, 4, 3, 2, 1], [2, 4, 1, 5, 3]):
    fam = monomial_supports(flag_input, order)
    print("  order %r -> %s" % (order, fam.to_sets()))
