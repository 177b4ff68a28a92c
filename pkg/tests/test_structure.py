import math
import random

import pytest

from extalg.core import generator, monomial, unit
from extalg.fields import QQ, PrimeField
from extalg.setfamilies import SetFamily, max_odd_intersecting, odd_upper_levels
from extalg.structure import (
    analyze,
    assemble,
    canonical_max_commutative,
    graded_radical,
    hom_from_images,
    is_commutative,
    is_e0_submodule,
    is_left_ideal,
    is_maximal_commutative,
    is_right_ideal,
    is_square_zero,
    is_subalgebra,
    max_commutative_dim,
    plucker_defects,
    radical_quotient_dim,
    upper_levels_commutative,
)
from extalg.subspace import (
    even_space,
    family_space,
    full_space,
    grade_space,
    monomial_space,
    odd_space,
    perp,
    product_span,
    span,
    star_space,
)
from extalg.text import parse_element


def elem(s, n):
    return parse_element(s, n)


def test_basic_predicates():
    assert is_subalgebra(even_space(4))
    assert is_commutative(even_space(4))
    assert is_subalgebra(full_space(3))
    assert not is_commutative(full_space(3))
    assert is_square_zero(grade_space(4, 3))
    assert not is_square_zero(grade_space(4, 2))
    assert is_subalgebra(span([elem("v{1,2}+v{3,4}", 4), elem("v{1,2,3,4}", 4)]))


def test_not_subalgebra():
    assert not is_subalgebra(span([elem("v{1,2}", 4), elem("v{3,4}", 4)]))


def test_ideals():
    x = span([elem("v{1}", 3)])
    left = product_span(full_space(3), x)
    assert is_left_ideal(left)
    two_sided = product_span(full_space(3), x).sum(product_span(x, full_space(3)))
    assert is_left_ideal(two_sided) and is_right_ideal(two_sided)
    assert not is_left_ideal(x)


def test_e0_submodule():
    assert is_e0_submodule(star_space(4, 1, 1).sum(star_space(4, 3, 1)))
    assert not is_e0_submodule(span([elem("v{1}", 3)]))


def test_square_zero_iff_intersecting_family():
    good = family_space(SetFamily.from_sets(4, [[1], [1, 2, 3]]))
    bad = family_space(SetFamily.from_sets(4, [[1], [2, 3, 4]]))
    assert is_square_zero(good)
    assert not is_square_zero(bad)


def test_assemble_upper_levels_n5():
    d = family_space(odd_upper_levels(5))
    a = assemble(d)
    assert a.dim == 27
    assert is_maximal_commutative(a)
    assert a == even_space(5).sum(d)


def test_assemble_rejects_even_input():
    with pytest.raises(ValueError):
        assemble(span([elem("v{1,2}", 3)]))


def test_assemble_closes_under_e0():
    d = span([elem("v{1}", 4)])
    a = assemble(d)
    assert is_subalgebra(a) and is_commutative(a)
    assert a.contains(elem("v{1,2,3}", 4))


def test_max_commutative_dim_table():
    got = [max_commutative_dim(n) for n in range(1, 9)]
    assert got == [2, 3, 6, 12, 27, 48, 101, 192]
    with pytest.raises(ValueError):
        max_commutative_dim(0)


def test_dim_formula_against_search_oracle():
    for n in range(1, 7):
        res = max_odd_intersecting(n)
        assert max_commutative_dim(n) == 2 ** (n - 1) + res.size


def test_canonical_algebras():
    for n in range(1, 7):
        a = canonical_max_commutative(n)
        assert a.dim == max_commutative_dim(n)
        assert is_maximal_commutative(a)
    with pytest.raises(ValueError):
        canonical_max_commutative(3, l=4)


def test_canonical_even_n_structure():
    a = canonical_max_commutative(4, l=2)
    assert a.dim == 12
    d = a.intersect(odd_space(4))
    assert d.dim == 4
    assert perp(d) == d
    assert all(m & 0b0010 for m in d.pivot_masks())


def test_maximality_rejections():
    assert not is_maximal_commutative(even_space(2))
    assert not is_maximal_commutative(full_space(2))
    small = even_space(4).sum(span([elem("v{1,2,3}", 4)]))
    assert is_commutative(small) and is_subalgebra(small)
    assert not is_maximal_commutative(small)
    assert not is_maximal_commutative(span([elem("v{1}", 2)]))


def test_upper_levels_companion():
    b4 = upper_levels_commutative(4)
    assert b4.dim == 12 and is_maximal_commutative(b4)
    b6 = upper_levels_commutative(6)
    assert b6.dim == 48 and is_maximal_commutative(b6)
    assert canonical_max_commutative(4) != b4


def test_radical_invariant():
    assert radical_quotient_dim(canonical_max_commutative(4)) == 7
    assert radical_quotient_dim(upper_levels_commutative(4)) == 10
    assert radical_quotient_dim(canonical_max_commutative(6)) == 16
    assert radical_quotient_dim(upper_levels_commutative(6)) == (
        math.comb(6, 2) + math.comb(5, 2) + math.comb(5, 5)
    )


def test_graded_radical():
    a = canonical_max_commutative(4)
    r = graded_radical(a)
    assert r.dim == a.dim - 1
    assert not r.contains(unit(4))
    with pytest.raises(ValueError):
        graded_radical(span([elem("v{1}+v{2,3}", 3), elem("1", 3)]))
    with pytest.raises(ValueError):
        graded_radical(grade_space(3, 1))  # no unit


def test_plucker_witness():
    x = elem("v{1,2}+v{3,4}", 4)
    defects = dict(plucker_defects(x))
    assert set(defects) == {(1, 2, 3, 4)}
    assert defects[(1, 2, 3, 4)] == 1
    assert not (x * x).is_zero()


def test_plucker_flat_cases():
    y = elem("v{1,2}+v{1,3}", 4)  # v1*(v2+v3)
    assert all(not v for _, v in plucker_defects(y))
    assert (y * y).is_zero()
    rng = random.Random(3)
    lin = [0b0001, 0b0010, 0b0100, 0b1000]
    for _ in range(50):
        a = sum((generator(4, i + 1).scale(rng.randint(-3, 3)) for i in range(4)), monomial(4, (), 0))
        b = sum((generator(4, i + 1).scale(rng.randint(-3, 3)) for i in range(4)), monomial(4, (), 0))
        y = a * b
        if y.is_zero():
            continue
        assert all(not v for _, v in plucker_defects(y))
        assert (y * y).is_zero()


def test_plucker_equivalence_exhaustive_gf3():
    """Over gf:3 at n=4, walk every degree-2 element: defects all vanish
    exactly when the square does."""
    from itertools import product as iproduct

    f = PrimeField(3)
    deg2 = [m for m in range(16) if m.bit_count() == 2]
    from extalg.core import GrassmannElement

    count_flat = 0
    for coeffs in iproduct(range(3), repeat=6):
        if not any(coeffs):
            continue
        x = GrassmannElement(4, {m: f.coerce(c) for m, c in zip(deg2, coeffs) if c})
        flat = all(not v for _, v in plucker_defects(x))
        assert flat == (x * x).is_zero()
        count_flat += flat
    assert count_flat > 0


def test_plucker_validation():
    with pytest.raises(ValueError):
        plucker_defects(elem("v{1}", 3))
    with pytest.raises(ValueError):
        plucker_defects(elem("v{1,2}+v{3}", 3))
    with pytest.raises(ValueError):
        plucker_defects(elem("0", 3))


def test_hom_validation():
    with pytest.raises(ValueError):
        hom_from_images([elem("v{1,2}", 3)])
    with pytest.raises(ValueError):
        hom_from_images([elem("1", 2)])
    with pytest.raises(ValueError):
        hom_from_images([])


def test_hom_is_multiplicative():
    h = hom_from_images([elem("v{2}", 3), elem("v{1}+v{1,2,3}", 3), elem("v{3}", 3)])
    rng = random.Random(17)
    for _ in range(30):
        masks_a = rng.sample(range(8), rng.randint(1, 3))
        masks_b = rng.sample(range(8), rng.randint(1, 3))
        from extalg.core import GrassmannElement

        a = GrassmannElement(3, {m: QQ.coerce(rng.randint(1, 4)) for m in masks_a})
        b = GrassmannElement(3, {m: QQ.coerce(rng.randint(1, 4)) for m in masks_b})
        assert h.apply(a * b) == h.apply(a) * h.apply(b)
        assert h.apply(a + b) == h.apply(a) + h.apply(b)
    assert h.apply(unit(3)) == unit(3)


def test_hom_bijectivity():
    swap = hom_from_images([elem("v{2}", 2), elem("v{1}", 2)])
    assert swap.is_bijective()
    collapse = hom_from_images([elem("v{1}", 2), elem("v{1}", 2)])
    assert not collapse.is_bijective()
    shear = hom_from_images([elem("v{1}+v{2,3,4}", 4), elem("v{2}", 4), elem("v{3}", 4), elem("v{4}", 4)])
    assert shear.is_bijective()


def test_hom_between_different_ambients():
    h = hom_from_images([elem("v{1,2,3}", 3)])  # maps E(1) into E(3)
    assert h.apply(generator(1, 1)) == elem("v{1,2,3}", 3)
    assert not h.is_bijective()


def test_hom_image_of_maximal_is_maximal():
    shear = hom_from_images([elem("v{1}+v{2,3,4}", 4), elem("v{2}", 4), elem("v{3}", 4), elem("v{4}", 4)])
    img = shear.apply_space(canonical_max_commutative(4))
    assert img.dim == 12
    assert is_maximal_commutative(img)
    assert not img.is_graded()


def test_analyze_report():
    rep = analyze(canonical_max_commutative(4))
    d = rep.to_dict()
    assert d["dim"] == 12
    assert d["maximal_commutative"] is True
    assert d["subalgebra"] is True and d["commutative"] is True
    assert d["graded"] is True and d["monomial"] is True
    assert d["grade_dims"] == [1, 1, 6, 3, 1]
    assert d["field"] == "rational"
    rep2 = analyze(span([elem("v{1,2}+v{3,4}", 4), elem("v{1,2,3,4}", 4)]))
    d2 = rep2.to_dict()
    assert d2["subalgebra"] is True
    assert d2["square_dim"] == 1
    assert d2["graded"] is True and d2["monomial"] is False


def test_gf3_canonical_maximal():
    f = PrimeField(3)
    a = canonical_max_commutative(4, field=f)
    assert a.dim == 12
    assert is_maximal_commutative(a)
