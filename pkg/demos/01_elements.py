"""Elements: exact arithmetic, parities, and the monomial order.

Run:  python3 demos/01_elements.py
"""

from fractions import Fraction

from extalg import Monomial, PrimeField, generator, monomial, parse_expression, print_element, unit

n = 4
v1, v2 = generator(n, 1), generator(n, 2)

print("generators anticommute:")
print("  v1*v2 =", print_element(v1 * v2))
print("  v2*v1 =", print_element(v2 * v1))
print("  v1*v1 =", print_element(v1 * v1))

# mixed-degree elements do not commute in general, and their squares
# can be nonzero even though every generator squares to zero
x = v1 + monomial(n, (2, 3))
print("\nx = v1 + v23 has parts of both parities:")
print("  x^2      =", print_element(x * x))
print("  even(x)  =", print_element(x.even_part()))
print("  odd(x)   =", print_element(x.odd_part()))

# the unit participates like any even element
y = unit(n) + monomial(n, (1, 2), Fraction(1, 2))
print("\ny =", print_element(y))
print("  y*y =", print_element(y * y))

# the calculator grammar accepts products and parentheses
z = parse_expression("(v{1}+v{2,3})*(v{1}-v{2,3})", n)
print("\n(v1+v23)*(v1-v23) =", print_element(z))

# the monomial order: descending monomials are ascending bitmasks,
# so the unit is the largest monomial and v{1..n} is the smallest
monos = sorted((Monomial(3, m) for m in range(8)), reverse=True)
print("\nall monomials of E(3), largest first:")
print(" ", " > ".join(repr(m) for m in monos))

w = monomial(n, (2,), 4) + monomial(n, (1, 2, 3), -1)
print("\ninitial term picks the largest monomial present:")
print("  w        =", print_element(w))
print("  init(w)  =", print_element(w.initial_term()))

# the same machinery over GF(7): 1/2 means the inverse of 2 mod 7
f7 = PrimeField(7)
a = monomial(3, (1,), Fraction(1, 2))
b = monomial(3, (1,), 1, field=f7).scale(f7.from_ratio(1, 2))
print("\nhalves, rational vs gf:7:")
print("  over Q:   ", print_element(a))
print("  over gf:7:", print_element(b))
