import random
from fractions import Fraction
from itertools import combinations

import pytest

from extalg.core import (
    AmbientMismatch,
    GrassmannElement,
    Monomial,
    compare_monomials,
    generator,
    monomial,
    unit,
    zero,
)
from extalg.fields import QQ, PrimeField


def naive_monomial_product(idx_a, idx_b):
    """Sign oracle: concatenate index lists and bubble-sort, counting swaps."""
    if set(idx_a) & set(idx_b):
        return 0, ()
    seq = list(idx_a) + list(idx_b)
    swaps = 0
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                swaps += 1
    return (-1) ** swaps, tuple(seq)


def test_generator_relations():
    n = 4
    for i in range(1, n + 1):
        vi = generator(n, i)
        assert (vi * vi).is_zero()
        for j in range(1, n + 1):
            if i != j:
                assert generator(n, i) * generator(n, j) == -(generator(n, j) * generator(n, i))


def test_product_against_swap_counting_oracle():
    n = 6
    idx_sets = [s for r in range(n + 1) for s in combinations(range(1, n + 1), r)]
    rng = random.Random(7)
    for _ in range(300):
        a = rng.choice(idx_sets)
        b = rng.choice(idx_sets)
        got = monomial(n, a) * monomial(n, b)
        sign, merged = naive_monomial_product(a, b)
        if sign == 0:
            assert got.is_zero()
        else:
            assert got == monomial(n, merged, sign)


def test_monomial_unordered_indices_sign():
    assert monomial(3, (2, 1)) == monomial(3, (1, 2), -1)
    assert monomial(3, (3, 1, 2)) == monomial(3, (1, 2, 3))
    assert monomial(3, (3, 2, 1)) == monomial(3, (1, 2, 3), -1)


def test_monomial_validation():
    with pytest.raises(ValueError):
        monomial(3, (1, 1))
    with pytest.raises(ValueError):
        monomial(3, (0,))
    with pytest.raises(ValueError):
        monomial(3, (4,))


def test_unit_is_neutral():
    x = monomial(3, (1, 3), 5) + monomial(3, (2,), -2)
    assert unit(3) * x == x
    assert x * unit(3) == x


def test_coefficient_arithmetic():
    x = monomial(2, (1,), Fraction(1, 2))
    y = monomial(2, (1,), Fraction(1, 3))
    assert (x + y).coefficient(0b01) == Fraction(5, 6)
    assert (x - x).is_zero()
    assert (x / 2).coefficient(0b01) == Fraction(1, 4)
    assert (3 * x).coefficient(0b01) == Fraction(3, 2)


def test_floats_rejected():
    with pytest.raises(TypeError):
        monomial(2, (1,), 0.5)
    with pytest.raises(TypeError):
        GrassmannElement(2, {1: 0.5})
    with pytest.raises(TypeError):
        monomial(2, (1,)).scale(0.5)


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        generator(2, 1) + generator(3, 1)
    with pytest.raises(AmbientMismatch):
        generator(2, 1) * generator(3, 1)


def test_grade_decomposition():
    x = unit(4) + generator(4, 2) + monomial(4, (1, 3)) + monomial(4, (1, 2, 3))
    assert x.grade_component(0) == unit(4)
    assert x.grade_component(2) == monomial(4, (1, 3))
    assert x.grade_component(4).is_zero()
    assert x.even_part() == unit(4) + monomial(4, (1, 3))
    assert x.odd_part() == generator(4, 2) + monomial(4, (1, 2, 3))
    assert x.even_part() + x.odd_part() == x
    assert x.degrees() == {0, 1, 2, 3}
    assert not x.is_homogeneous()
    assert monomial(4, (1, 3)).is_homogeneous()


def test_min_degree():
    x = monomial(4, (1, 2)) + monomial(4, (1, 2, 3, 4))
    assert x.min_degree() == 2
    assert x.min_part() == monomial(4, (1, 2))
    with pytest.raises(ValueError):
        zero(4).min_degree()


def test_substitute_zero():
    x = generator(3, 1) + monomial(3, (1, 2)) + monomial(3, (2, 3))
    assert x.substitute_zero(1) == monomial(3, (2, 3))
    assert x.substitute_zero(2) == generator(3, 1)
    assert x.substitute_zero(3) == generator(3, 1) + monomial(3, (1, 2))
    y = generator(3, 2)
    assert (x * y).substitute_zero(1) == x.substitute_zero(1) * y.substitute_zero(1)


def test_initial_monomial_and_term():
    x = monomial(3, (2,), 4) + monomial(3, (1, 2, 3), -1)
    assert x.initial_monomial() == Monomial(3, 0b010)
    assert x.initial_term() == monomial(3, (2,), 4)
    assert zero(3).initial_term().is_zero()
    with pytest.raises(ValueError):
        zero(3).initial_monomial()
    assert (unit(3) + generator(3, 1)).initial_monomial().mask == 0


def test_initial_term_of_product():
    x = generator(3, 1) + monomial(3, (2, 3))
    y = generator(3, 2) + monomial(3, (1, 3))
    assert x.initial_term() == generator(3, 1)
    assert (x * y).initial_term() == monomial(3, (1, 2))


def test_order_matches_ascending_masks():
    for n in range(1, 7):
        monos = [Monomial(n, m) for m in range(1 << n)]
        in_order = sorted(monos, reverse=True)
        assert [m.mask for m in in_order] == list(range(1 << n))


def test_order_definition_spot_checks():
    # larger monomial = earlier first difference in descending index sequences
    assert Monomial(3, 0b001) > Monomial(3, 0b010)  # v1 beats v2
    assert Monomial(3, 0b001) > Monomial(3, 0b011)  # v1 beats v12 (prefix)
    assert Monomial(3, 0b011) > Monomial(3, 0b100)  # v12 beats v3
    assert Monomial(3, 0b100) > Monomial(3, 0b111)  # v3 beats v123 (prefix)
    assert Monomial(3, 0) > Monomial(3, 0b001)  # the unit beats everything
    assert compare_monomials(Monomial(2, 1), Monomial(2, 1)) == 0


def test_order_total_and_antisymmetric():
    n = 5
    monos = [Monomial(n, m) for m in range(1 << n)]
    for a in monos:
        for b in monos:
            c = compare_monomials(a, b)
            assert c == -compare_monomials(b, a)
            assert (c == 0) == (a.mask == b.mask)


def test_monomial_descending_indices():
    m = Monomial(5, 0b10110)
    assert m.indices() == (2, 3, 5)
    assert m.descending_indices() == (5, 3, 2)
    assert m.degree == 3
    assert Monomial.from_indices(5, (5, 2, 3)) == m


def test_element_equality_and_hash():
    x = generator(3, 1) + monomial(3, (2, 3))
    y = monomial(3, (2, 3)) + generator(3, 1)
    assert x == y and hash(x) == hash(y)
    assert x != x.scale(2)
    assert len({x, y}) == 1


def test_prime_field_elements():
    f = PrimeField(5)
    x = monomial(3, (1,), 2, field=f) + monomial(3, (2, 3), 4, field=f)
    y = monomial(3, (2,), 3, field=f)
    p = x * y
    assert p.coefficient(0b011) == f.coerce(6)
    assert (x + x + x + x + x).is_zero()


def test_repr_is_readable():
    assert "v{1,2}" in repr(monomial(3, (1, 2)))
    assert repr(Monomial(3, 0b011)) == "v{1,2}"


def test_support_sorted():
    x = monomial(4, (1, 2, 3)) + generator(4, 4) + unit(4)
    assert x.support() == [0, 0b0111, 0b1000]


def test_scalar_multiplication():
    x = generator(2, 1)
    assert x.scale(Fraction(1, 2)) + x.scale(Fraction(1, 2)) == x
    assert 2 * x == x + x
    assert -x == x.scale(-1)
