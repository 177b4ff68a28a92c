import random
from itertools import product

import pytest

from extalg.core import AmbientMismatch, GrassmannElement, generator, monomial, unit, zero
from extalg.fields import QQ, PrimeField
from extalg.subspace import (
    Subspace,
    even_space,
    family_space,
    full_space,
    grade_space,
    hilbert_series,
    initial_span,
    min_degree_space,
    monomial_space,
    monomial_supports,
    monomialize,
    odd_space,
    perp,
    product_span,
    skew_form,
    span,
    split_generator,
    star_space,
    zero_space,
)
from extalg.text import parse_element


def elem(s, n, field=QQ):
    return parse_element(s, n, field)


def rand_elem(rng, n, field=QQ, masks=None, max_terms=4):
    pool = list(masks) if masks is not None else list(range(1 << n))
    out = {}
    for _ in range(rng.randint(1, max_terms)):
        c = 0
        while c == 0:
            c = rng.randint(-4, 4)
        out[pool[rng.randrange(len(pool))]] = field.coerce(c)
    return GrassmannElement(n, out)


def rand_space(rng, n, max_dim=5, field=QQ, masks=None):
    vecs = [rand_elem(rng, n, field, masks) for _ in range(rng.randint(1, max_dim))]
    return span(vecs, n=n, field=field)


def all_space_elements(s):
    """Every element of a subspace over a prime field, zero included."""
    p = s.field.characteristic
    for coeffs in product(range(p), repeat=s.dim):
        acc = zero(s.n)
        for c, b in zip(coeffs, s.basis):
            if c:
                acc = acc + b.scale(s.field.coerce(c))
        yield acc


def test_span_canonical_basis():
    s = span([elem("v{1}+v{2}", 2), elem("v{2}", 2)])
    assert s.dim == 2
    assert s.basis == (elem("v{1}", 2), elem("v{2}", 2))
    assert s.pivot_masks() == (0b01, 0b10)


def test_span_drops_dependents_and_zeros():
    s = span([elem("v{1}", 3), elem("2*v{1}", 3), zero(3), elem("v{1}-v{2}", 3)])
    assert s.dim == 2


def test_span_equality_is_canonical():
    a = span([elem("v{1}+v{2}", 2), elem("v{1}-v{2}", 2)])
    b = span([elem("v{1}", 2), elem("v{2}", 2)])
    assert a == b and hash(a) == hash(b)


def test_pivots_strictly_ascend_and_rows_are_reduced():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 6)
        s = rand_space(rng, n)
        pivots = s.pivot_masks()
        assert list(pivots) == sorted(pivots)
        for i, row in enumerate(s.basis):
            assert row.coefficient(pivots[i]) == s.field.one
            for j, other in enumerate(pivots):
                if j != i:
                    assert not row.coefficient(other)


def test_reduce_and_contains():
    s = span([elem("v{1}+v{2}", 2)])
    assert s.contains(elem("2*v{1}+2*v{2}", 2))
    assert not s.contains(elem("v{1}", 2))
    r = s.reduce(elem("v{1}", 2))
    assert not r.is_zero()
    assert s.reduce(elem("v{1}+v{2}", 2)).is_zero()


def test_sum_intersect_dimension_identity():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(2, 5)
        a = rand_space(rng, n)
        b = rand_space(rng, n)
        u = a.sum(b)
        i = a.intersect(b)
        assert a.dim + b.dim == u.dim + i.dim
        assert u.contains_space(a) and u.contains_space(b)
        assert a.contains_space(i) and b.contains_space(i)


def test_ambient_and_field_mismatch():
    with pytest.raises(AmbientMismatch):
        span([elem("v{1}", 2)]).sum(span([elem("v{1}", 3)]))
    f = PrimeField(3)
    with pytest.raises(AmbientMismatch):
        span([elem("v{1}", 2)]).intersect(span([elem("v{1}", 2, f)], n=2, field=f))


def test_standard_spaces():
    assert full_space(3).dim == 8
    assert even_space(3).dim == 4
    assert odd_space(3).dim == 4
    assert grade_space(4, 2).dim == 6
    assert star_space(4, 3, 1).dim == 3
    assert zero_space(5).is_zero()
    assert monomial_space(3, [0b101, 0b010]).dim == 2
    assert even_space(3).sum(odd_space(3)) == full_space(3)
    assert even_space(3).intersect(odd_space(3)).is_zero()


def test_is_monomial_and_graded():
    assert monomial_space(3, [0b011, 0b100]).is_monomial()
    assert not span([elem("v{1}+v{2}", 2)]).is_monomial()
    assert span([elem("v{1}+v{2}", 2)]).is_graded()
    assert not span([elem("v{1}+v{2,3}", 3)]).is_graded()
    assert hilbert_series(grade_space(4, 2)) == (0, 0, 6, 0, 0)
    with pytest.raises(ValueError):
        hilbert_series(span([elem("v{1}+v{2,3}", 3)]))


def test_split_generator_basics():
    d = span([elem("v{1}+v{2}", 2)])
    assert split_generator(d, 1) == monomial_space(2, [0b10])
    assert split_generator(d, 2) == monomial_space(2, [0b01])
    with pytest.raises(ValueError):
        split_generator(d, 3)


def test_split_preserves_dim_and_is_idempotent():
    rng = random.Random(23)
    for _ in range(60):
        n = rng.randint(2, 6)
        d = rand_space(rng, n)
        i = rng.randint(1, n)
        g = split_generator(d, i)
        assert g.dim == d.dim
        assert split_generator(g, i) == g


def test_split_fixes_monomial_spaces():
    rng = random.Random(31)
    for _ in range(30):
        n = rng.randint(2, 6)
        masks = rng.sample(range(1 << n), rng.randint(1, min(6, 1 << n)))
        m = monomial_space(n, masks)
        i = rng.randint(1, n)
        assert split_generator(m, i) == m


def test_monomialize_order_dependence():
    d = span([elem("v{1}+v{2}", 2)])
    assert monomialize(d, [1, 2]) == monomial_space(2, [0b01])
    assert monomialize(d, [2, 1]) == monomial_space(2, [0b10])
    assert monomialize(d) == initial_span(d)


def test_monomialize_equals_initial_span_random():
    rng = random.Random(41)
    for _ in range(80):
        n = rng.randint(2, 6)
        d = rand_space(rng, n)
        m = monomialize(d)
        assert m.dim == d.dim
        assert m.is_monomial()
        assert m == initial_span(d)


def test_initial_span_brute_force_oracle_gf3():
    """Enumerate every element of small gf:3 subspaces and collect initial
    monomials directly; the span read off pivots must match exactly."""
    f = PrimeField(3)
    rng = random.Random(59)
    for _ in range(12):
        n = rng.randint(2, 4)
        d = rand_space(rng, n, max_dim=3, field=f)
        seen = set()
        for x in all_space_elements(d):
            if not x.is_zero():
                seen.add(x.initial_monomial().mask)
        assert seen == set(initial_span(d).pivot_masks())
        assert len(seen) == d.dim


def test_order_validation():
    d = span([elem("v{1}", 3)])
    with pytest.raises(ValueError):
        monomialize(d, [1, 2])
    with pytest.raises(ValueError):
        monomialize(d, [1, 2, 2])
    with pytest.raises(ValueError):
        monomialize(d, [0, 1, 2])


def test_monomial_supports():
    d = span([elem("v{1,2,3}+v{4,5,6}", 6), elem("v{1,2,4}+v{3,5,6}", 6)])
    assert monomial_supports(d).to_sets() == [[1, 2, 3], [1, 2, 4]]
    assert monomial_supports(d, [1, 2, 6, 4, 5, 3]).to_sets() == [[1, 2, 4], [4, 5, 6]]


def test_product_span():
    a = span([elem("v{1}", 3), elem("v{2}", 3)])
    assert product_span(a, a) == monomial_space(3, [0b011])
    e = full_space(2)
    assert product_span(e, e) == e
    assert product_span(a, zero_space(3)).is_zero()


def test_min_degree_space():
    a = span([elem("v{1}+v{2,3}", 3), elem("v{1,2,3}", 3)])
    m = min_degree_space(a)
    assert m == span([elem("v{1}", 3), elem("v{1,2,3}", 3)])
    assert m.dim == a.dim
    g = grade_space(4, 2)
    assert min_degree_space(g) == g


def test_min_degree_space_mixed_rows():
    a = span([elem("v{1}+v{1,2,3}", 3), elem("v{2}+v{1,2,3}", 3)])
    m = min_degree_space(a)
    assert m == span([elem("v{1}", 3), elem("v{2}", 3)])


def test_skew_form_values():
    a = elem("v{1}", 2)
    b = elem("v{2}", 2)
    assert skew_form(a, b) == elem("v{1,2}", 2)
    assert skew_form(b, a) == elem("-v{1,2}", 2)
    x = elem("v{1}", 3)
    y = elem("v{2,3}+v{1,2,3}", 3)
    with pytest.raises(ValueError):
        skew_form(x, y)


def test_skew_form_grade_by_parity():
    # even ambient: the pairing lands in the top grade
    s = skew_form(elem("v{1}", 4), elem("v{2,3,4}", 4))
    assert s == elem("v{1,2,3,4}", 4)
    # odd ambient: it lands one grade below the top
    t = skew_form(elem("v{1}", 5), elem("v{2,3,4}", 5))
    assert t == elem("v{1,2,3,4}", 5)
    u = skew_form(elem("v{1}", 5), elem("v{3,4,5}", 5))
    assert u == elem("v{1,3,4,5}", 5)


def test_skew_form_is_skew():
    rng = random.Random(61)
    for n in (2, 3, 4, 5):
        odd_masks = [m for m in range(1 << n) if m.bit_count() & 1]
        for _ in range(20):
            a = rand_elem(rng, n, masks=odd_masks)
            b = rand_elem(rng, n, masks=odd_masks)
            assert skew_form(a, b) == -skew_form(b, a)


def test_perp_examples():
    for n in (2, 4):
        assert perp(odd_space(n)).is_zero()
        assert perp(zero_space(n)) == odd_space(n)
    d = star_space(4, 1, 1).sum(star_space(4, 3, 1))  # odd monomials containing 1
    assert perp(d) == d


def test_perp_brute_force_oracle_gf3():
    """Check perp membership against exhaustive enumeration of the odd part."""
    f = PrimeField(3)
    n = 4
    rng = random.Random(67)
    odd_masks = [m for m in range(1 << n) if m.bit_count() & 1]
    for _ in range(4):
        d = rand_space(rng, n, max_dim=2, field=f, masks=odd_masks)
        p = perp(d)
        count = 0
        for u in all_space_elements(odd_space(n, f)):
            orthogonal = all(skew_form(u, b).is_zero() for b in d.basis)
            assert orthogonal == p.contains(u)
            count += orthogonal
        assert count == f.characteristic ** p.dim


def test_perp_dimension_formula_even_n():
    rng = random.Random(71)
    for n in (2, 4):
        odd_masks = [m for m in range(1 << n) if m.bit_count() & 1]
        for _ in range(10):
            d = rand_space(rng, n, max_dim=3, masks=odd_masks)
            assert perp(d).dim == 2 ** (n - 1) - d.dim
            assert perp(perp(d)) == d


def test_family_space():
    from extalg.setfamilies import SetFamily

    fam = SetFamily.from_sets(3, [[1], [1, 2, 3]])
    s = family_space(fam)
    assert s.dim == 2 and s.is_monomial()
    assert s.pivot_masks() == (0b001, 0b111)


def test_gf5_lane_matches_rational_behavior():
    f = PrimeField(5)
    rng = random.Random(73)
    for _ in range(20):
        n = rng.randint(2, 5)
        d = rand_space(rng, n, max_dim=4, field=f)
        m = monomialize(d)
        assert m.dim == d.dim and m.is_monomial() and m == initial_span(d)


def test_subspace_repr():
    s = span([elem("v{1}+v{2}", 2)])
    assert "v{1}+v{2}" in repr(s)
