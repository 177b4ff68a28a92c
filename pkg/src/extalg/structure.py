"""Subalgebra structure: commutativity tests, maximal commutative subalgebras,
algebra maps from generator images, and the graded radical invariant.

The even part is central and odd elements commute exactly when their product
vanishes, so a subspace containing the even part is a maximal commutative
subalgebra precisely when its odd part squares to zero, is stable under
multiplication by the even part, and equals its own orthogonal space under
the skew pairing.  That criterion is what is_maximal_commutative checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .core import GrassmannElement, unit, zero
from .fields import QQ, FpElement, PrimeField
from .subspace import (
    Subspace,
    even_space,
    full_space,
    hilbert_series,
    monomial_space,
    odd_space,
    perp,
    product_span,
    span,
)

__all__ = [
    "is_subalgebra",
    "is_commutative",
    "is_square_zero",
    "is_e0_submodule",
    "is_left_ideal",
    "is_right_ideal",
    "assemble",
    "is_maximal_commutative",
    "max_commutative_dim",
    "canonical_max_commutative",
    "upper_levels_commutative",
    "StructureReport",
    "analyze",
    "plucker_defects",
    "AlgebraHom",
    "hom_from_images",
    "graded_radical",
    "radical_quotient_dim",
]


def is_subalgebra(a: Subspace) -> bool:
    """Closed under products (unit not required)."""
    for x in a.basis:
        for y in a.basis:
            if not a.contains(x * y):
                return False
    return True


def is_commutative(a: Subspace) -> bool:
    basis = a.basis
    for i, x in enumerate(basis):
        for y in basis[i + 1 :]:
            if x * y != y * x:
                return False
    return True


def is_square_zero(d: Subspace) -> bool:
    """Every product of two members vanishes (the span of products is zero)."""
    return product_span(d, d).is_zero()


def is_e0_submodule(d: Subspace) -> bool:
    return d.contains_space(product_span(even_space(d.n, d.field), d))


def is_left_ideal(x: Subspace) -> bool:
    return x.contains_space(product_span(full_space(x.n, x.field), x))


def is_right_ideal(x: Subspace) -> bool:
    return x.contains_space(product_span(x, full_space(x.n, x.field)))


def assemble(d: Subspace) -> Subspace:
    """E_even + E_even*D + D; commutative subalgebra whenever D is an odd
    subspace with square zero."""
    for b in d.basis:
        if not b.is_odd():
            raise ValueError("assemble expects a subspace of the odd part")
    e0 = even_space(d.n, d.field)
    return e0.sum(product_span(e0, d)).sum(d)


def is_maximal_commutative(a: Subspace) -> bool:
    """Maximal commutative subalgebra test via the odd-part criterion."""
    e0 = even_space(a.n, a.field)
    if not a.contains_space(e0):
        return False
    d = a.intersect(odd_space(a.n, a.field))
    if a.dim != e0.dim + d.dim:
        return False
    if not is_square_zero(d):
        return False
    if not is_e0_submodule(d):
        return False
    return perp(d) == d


def max_commutative_dim(n: int) -> int:
    """Dimension of the largest commutative subalgebra on n generators."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive int, got %r" % (n,))
    if n % 2 == 0:
        return 3 * 2 ** (n - 2)
    if n % 4 == 1:
        k = (n - 1) // 4
        return 2 ** (n - 1) + sum(math.comb(n, 2 * j + 1) for j in range(k, 2 * k + 1))
    k = (n - 3) // 4
    return (
        2 ** (n - 1)
        + math.comb(n - 1, 2 * k)
        + sum(math.comb(n, 2 * j + 3) for j in range(k, 2 * k + 1))
    )


def _even_masks(n):
    return [m for m in range(1 << n) if not m.bit_count() & 1]


def _upper_odd_masks(n):
    return [m for m in range(1 << n) if m.bit_count() & 1 and 2 * m.bit_count() > n]


def _star_masks(n, k, l):
    bit = 1 << (l - 1)
    return [m for m in range(1 << n) if m & bit and m.bit_count() == k]


def canonical_max_commutative(n: int, l: int = 1, field=QQ) -> Subspace:
    """A commutative subalgebra of the maximal dimension.

    Even n: the even part plus every monomial through the point l.
    n = 4k+1: the even part plus the odd levels above n/2.
    n = 4k+3: additionally the star of (2k+1)-sets through l."""
    if not 1 <= l <= n:
        raise ValueError("star element %r outside 1..%d" % (l, n))
    masks = set(_even_masks(n))
    if n % 2 == 0:
        bit = 1 << (l - 1)
        masks.update(m for m in range(1 << n) if m & bit)
    elif n % 4 == 1:
        masks.update(_upper_odd_masks(n))
    else:
        k = (n - 3) // 4
        masks.update(_upper_odd_masks(n))
        masks.update(_star_masks(n, 2 * k + 1, l))
    return monomial_space(n, masks, field)


def upper_levels_commutative(n: int, l: int = 1, field=QQ) -> Subspace:
    """The homogeneous companion family: even part, odd levels above n/2,
    plus a star level when n is 2 mod 4 or 3 mod 4.  For odd n this equals
    canonical_max_commutative; for even n it is a maximal commutative
    subalgebra of the same dimension built from whole levels."""
    if not 1 <= l <= n:
        raise ValueError("star element %r outside 1..%d" % (l, n))
    masks = set(_even_masks(n))
    masks.update(_upper_odd_masks(n))
    if n % 4 == 2:
        k = (n - 2) // 4
        masks.update(_star_masks(n, 2 * k + 1, l))
    elif n % 4 == 3:
        k = (n - 3) // 4
        masks.update(_star_masks(n, 2 * k + 1, l))
    return monomial_space(n, masks, field)


@dataclass
class StructureReport:
    n: int
    field: str
    dim: int
    square_dim: int
    subalgebra: bool
    commutative: bool
    square_zero: bool
    e0_submodule: bool
    maximal_commutative: bool
    graded: bool
    monomial: bool
    grade_dims: tuple | None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "field": self.field,
            "dim": self.dim,
            "square_dim": self.square_dim,
            "subalgebra": self.subalgebra,
            "commutative": self.commutative,
            "square_zero": self.square_zero,
            "e0_submodule": self.e0_submodule,
            "maximal_commutative": self.maximal_commutative,
            "graded": self.graded,
            "monomial": self.monomial,
            "grade_dims": list(self.grade_dims) if self.grade_dims is not None else None,
        }


def analyze(a: Subspace) -> StructureReport:
    graded = a.is_graded()
    return StructureReport(
        n=a.n,
        field=a.field.name,
        dim=a.dim,
        square_dim=product_span(a, a).dim,
        subalgebra=is_subalgebra(a),
        commutative=is_commutative(a),
        square_zero=is_square_zero(a),
        e0_submodule=is_e0_submodule(a),
        maximal_commutative=is_maximal_commutative(a),
        graded=graded,
        monomial=a.is_monomial(),
        grade_dims=hilbert_series(a) if graded else None,
    )


def plucker_defects(x: GrassmannElement) -> list:
    """Quadratic defects of a degree-2 element over all 4-subsets.

    All of them vanish exactly when x*x = 0, which for degree 2 means x is
    a product of two degree-1 elements."""
    if x.is_zero() or x.degrees() != {2}:
        raise ValueError("defects are defined for nonzero homogeneous degree-2 elements")

    def c(i, j):
        return x.coefficient((1 << (i - 1)) | (1 << (j - 1)))

    out = []
    for i, j, k, l in combinations(range(1, x.n + 1), 4):
        out.append(((i, j, k, l), c(i, j) * c(k, l) - c(i, k) * c(j, l) + c(i, l) * c(j, k)))
    return out


class AlgebraHom:
    """Algebra map fixed by generator images u_1..u_m (odd, anticommuting)."""

    def __init__(self, images, field=None):
        images = tuple(images)
        if not images:
            raise ValueError("at least one generator image is required")
        n_target = images[0].n
        for u in images:
            if u.n != n_target:
                raise ValueError("generator images live in different algebras")
            if not u.is_odd():
                raise ValueError("generator images must lie in the odd part")
        # odd elements anticommute automatically (uv = -vu term by term), so
        # this loop can only fire if the parity check above is ever relaxed
        for i in range(len(images)):
            for j in range(i, len(images)):
                if images[i] * images[j] + images[j] * images[i]:
                    raise ValueError(
                        "images %d and %d do not anticommute; no algebra map exists" % (i + 1, j + 1)
                    )
        self.n_source = len(images)
        self.n_target = n_target
        self.images = images
        if field is None:
            field = QQ
            coeffs = [c for u in images for c in u.terms.values()]
            if coeffs and isinstance(coeffs[0], FpElement):
                field = PrimeField(coeffs[0].p)
        self.field = field
        self._cache = {0: unit(n_target, field)}

    def _image_of_mask(self, mask):
        hit = self._cache.get(mask)
        if hit is None:
            top = mask.bit_length() - 1
            hit = self._image_of_mask(mask ^ (1 << top)) * self.images[top]
            self._cache[mask] = hit
        return hit

    def apply(self, x: GrassmannElement) -> GrassmannElement:
        if x.n != self.n_source:
            raise ValueError("element from n=%d fed to a map on n=%d" % (x.n, self.n_source))
        acc = zero(self.n_target)
        for mask, c in x.terms.items():
            acc = acc + self._image_of_mask(mask).scale(c)
        return acc

    def apply_space(self, a: Subspace) -> Subspace:
        return span([self.apply(b) for b in a.basis], n=self.n_target, field=self.field)

    def is_bijective(self) -> bool:
        if self.n_source != self.n_target:
            return False
        vecs = [self._image_of_mask(m) for m in range(1 << self.n_source)]
        return span(vecs, n=self.n_target, field=self.field).dim == 1 << self.n_source


def hom_from_images(images, field=None) -> AlgebraHom:
    return AlgebraHom(images, field)


def graded_radical(a: Subspace) -> Subspace:
    """Positive-degree part of a graded unital subalgebra: its radical."""
    if not a.contains(unit(a.n, a.field)):
        raise ValueError("the radical shortcut needs a unital subalgebra")
    if not a.is_graded():
        raise ValueError("the radical shortcut needs a graded subalgebra")
    pos = [b for b in a.basis if b.min_degree() > 0]
    return Subspace(a.n, a.field, pos)


def radical_quotient_dim(a: Subspace) -> int:
    """dim(rad / rad^2); invariant under algebra isomorphism."""
    rad = graded_radical(a)
    rad2 = product_span(rad, rad)
    if not rad.contains_space(rad2):
        raise ValueError("not closed under products, no radical to speak of")
    return rad.dim - rad2.dim
