"""Sparse exterior algebra on n anticommuting generators, exact coefficients.

Monomials are subsets of {1..n} stored as bitmasks: generator i sits on bit
i-1, so v{1,3} on n=4 is 0b0101.  An element is a dict mask -> coefficient
with zero coefficients never stored.  The product of two basis monomials is

    v_J * v_K = 0                       if J and K share an index,
    v_J * v_K = (-1)^inv(J,K) v_{J|K}   otherwise,

where inv(J,K) counts pairs j in J, k in K with j > k (the transpositions
needed to merge the two ascending index lists).

Monomials are totally ordered: v_I > v_J when, reading supports in
decreasing order, the first differing position of I holds the smaller
index, or I is a proper prefix of J read that way.  Equivalently (proved
by a top-set-bit argument, pinned by an exhaustive test): v_I > v_J iff
mask(I) < mask(J) as integers, i.e. reverse colex on supports.  Echelon
code elsewhere exploits the mask form; `compare_monomials` follows the
sequence definition.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ, FpElement

__all__ = [
    "AmbientMismatch",
    "Monomial",
    "GrassmannElement",
    "sign_of_masks",
    "mul_masks",
    "compare_monomials",
    "monomial",
    "generator",
    "unit",
    "zero",
    "mask_of_indices",
    "indices_of_mask",
]

MAX_N = 16


class AmbientMismatch(ValueError):
    """Two operands live in exterior algebras with different n."""


def _check_n(n):
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise ValueError("number of generators must be an int in 1..%d, got %r" % (MAX_N, n))


def mask_of_indices(n: int, indices) -> int:
    """it is an error for an index to repeat or to leave 1..n."""
    mask = 0
    for i in indices:
        if not isinstance(i, int) or not 1 <= i <= n:
            raise ValueError("generator index %r outside 1..%d" % (i, n))
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError("generator index %d repeated" % i)
        mask |= bit
    return mask


def indices_of_mask(mask: int) -> tuple:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def sign_of_masks(j_mask: int, k_mask: int) -> int:
    """Sign of v_J * v_K: 0 on overlap, else (-1)^#{(j,k): j in J, k in K, j > k}."""
    if j_mask & k_mask:
        return 0
    inv = 0
    k = k_mask
    pos = 0
    while k:
        if k & 1:
            inv += (j_mask >> (pos + 1)).bit_count()
        k >>= 1
        pos += 1
    return -1 if inv & 1 else 1


def mul_masks(j_mask: int, k_mask: int):
    """(sign, union_mask) for a product of basis monomials; sign 0 on overlap."""
    s = sign_of_masks(j_mask, k_mask)
    return s, (j_mask | k_mask)


class Monomial:
    """One basis monomial v_J inside a fixed ambient algebra."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int):
        _check_n(n)
        if not isinstance(mask, int) or not 0 <= mask < (1 << n):
            raise ValueError("mask %r out of range for n=%d" % (mask, n))
        self.n = n
        self.mask = mask

    @classmethod
    def from_indices(cls, n: int, indices):
        return cls(n, mask_of_indices(n, indices))

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> tuple:
        return indices_of_mask(self.mask)

    def descending_indices(self) -> tuple:
        """The order key: support read from the largest index down."""
        return tuple(reversed(indices_of_mask(self.mask)))

    def __eq__(self, other):
        return isinstance(other, Monomial) and other.n == self.n and other.mask == self.mask

    def __hash__(self):
        return hash((self.n, self.mask))

    # comparisons follow the monomial order (unit is the largest), not mask value
    def __lt__(self, other):
        return compare_monomials(self, other) < 0

    def __le__(self, other):
        return compare_monomials(self, other) <= 0

    def __gt__(self, other):
        return compare_monomials(self, other) > 0

    def __ge__(self, other):
        return compare_monomials(self, other) >= 0

    def __repr__(self):
        if self.mask == 0:
            return "1"
        return "v{%s}" % ",".join(str(i) for i in self.indices())


def compare_monomials(a: Monomial, b: Monomial) -> int:
    """-1, 0 or +1 as a is below, equal to or above b in the monomial order.

    Supports are read in decreasing order; at the first difference the
    smaller index wins, and a proper prefix beats its extensions.
    """
    if not isinstance(a, Monomial) or not isinstance(b, Monomial):
        raise TypeError("compare_monomials expects Monomial operands")
    if a.n != b.n:
        raise AmbientMismatch("monomials from n=%d and n=%d" % (a.n, b.n))
    ka, kb = a.descending_indices(), b.descending_indices()
    for x, y in zip(ka, kb):
        if x != y:
            return 1 if x < y else -1
    if len(ka) == len(kb):
        return 0
    return 1 if len(ka) < len(kb) else -1


def _coerce_coeff(c):
    if isinstance(c, (Fraction, FpElement)):
        return c
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not allowed; use Fraction")
    raise TypeError("unsupported coefficient %r" % (c,))


class GrassmannElement:
    """Immutable sparse element; do not mutate .terms after construction."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None, _canonical=False):
        _check_n(n)
        self.n = n
        if terms is None:
            terms = {}
        if _canonical:
            self.terms = terms
            return
        clean = {}
        top = 1 << n
        for mask, c in terms.items():
            if not isinstance(mask, int) or not 0 <= mask < top:
                raise ValueError("term mask %r out of range for n=%d" % (mask, n))
            c = _coerce_coeff(c)
            if c:
                clean[mask] = c
        self.terms = clean

    # -- inspection ---------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list:
        """Term masks in decreasing monomial order (ascending mask)."""
        return sorted(self.terms)

    def monomials(self) -> list:
        return [Monomial(self.n, m) for m in self.support()]

    def coefficient(self, mono):
        # default 0 as a plain int so it compares true against any field zero
        mask = mono.mask if isinstance(mono, Monomial) else mono
        return self.terms.get(mask, 0)

    def degrees(self) -> set:
        return {m.bit_count() for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    # -- linear structure ---------------------------------------------

    def _check_same(self, other):
        if self.n != other.n:
            raise AmbientMismatch("elements from n=%d and n=%d" % (self.n, other.n))

    def __add__(self, other):
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        self._check_same(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m)
            if s is None:
                acc[m] = c
            else:
                s = s + c
                if s:
                    acc[m] = s
                else:
                    del acc[m]
        return GrassmannElement(self.n, acc, _canonical=True)

    def __neg__(self):
        return GrassmannElement(self.n, {m: -c for m, c in self.terms.items()}, _canonical=True)

    def __sub__(self, other):
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return self.__add__(-other)

    def scale(self, c):
        c = _coerce_coeff(c)
        if not c:
            return GrassmannElement(self.n, {}, _canonical=True)
        return GrassmannElement(self.n, {m: c * x for m, x in self.terms.items()}, _canonical=True)

    def __mul__(self, other):
        if isinstance(other, GrassmannElement):
            self._check_same(other)
            acc = {}
            for mj, cj in self.terms.items():
                for mk, ck in other.terms.items():
                    if mj & mk:
                        continue
                    s = sign_of_masks(mj, mk)
                    u = mj | mk
                    add = cj * ck if s > 0 else -(cj * ck)
                    cur = acc.get(u)
                    if cur is None:
                        acc[u] = add
                    else:
                        cur = cur + add
                        if cur:
                            acc[u] = cur
                        else:
                            del acc[u]
            return GrassmannElement(self.n, acc, _canonical=True)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        # scalars commute past everything here, coefficients are central
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, c):
        one = _coerce_coeff(1) if isinstance(c, (int, Fraction)) else c / c
        return self.scale(one / c)

    def __eq__(self, other):
        return (
            isinstance(other, GrassmannElement)
            and other.n == self.n
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- grading ------------------------------------------------------

    def grade_component(self, k: int):
        if not 0 <= k <= self.n:
            raise ValueError("degree %r outside 0..%d" % (k, self.n))
        return GrassmannElement(
            self.n, {m: c for m, c in self.terms.items() if m.bit_count() == k}, _canonical=True
        )

    def even_part(self):
        return GrassmannElement(
            self.n, {m: c for m, c in self.terms.items() if not m.bit_count() & 1}, _canonical=True
        )

    def odd_part(self):
        return GrassmannElement(
            self.n, {m: c for m, c in self.terms.items() if m.bit_count() & 1}, _canonical=True
        )

    def is_even(self) -> bool:
        return all(not m.bit_count() & 1 for m in self.terms)

    def is_odd(self) -> bool:
        return all(m.bit_count() & 1 for m in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero element has no minimal degree part")
        return min(m.bit_count() for m in self.terms)

    def min_part(self):
        """Homogeneous component of lowest degree; undefined on zero."""
        d = self.min_degree()
        return self.grade_component(d)

    # -- substitution and initial data ---------------------------------

    def substitute_zero(self, i: int):
        """Set generator i to zero: drop every term whose support contains i.

        This is an algebra endomorphism; its square equals itself and its
        kernel (multiples of the killed generator) squares to zero.
        """
        if not isinstance(i, int) or not 1 <= i <= self.n:
            raise ValueError("generator index %r outside 1..%d" % (i, self.n))
        bit = 1 << (i - 1)
        return GrassmannElement(
            self.n, {m: c for m, c in self.terms.items() if not m & bit}, _canonical=True
        )

    def initial_monomial(self) -> Monomial:
        """Largest monomial of the support (smallest mask); undefined on zero."""
        if not self.terms:
            raise ValueError("the zero element has no initial monomial")
        return Monomial(self.n, min(self.terms))

    def initial_term(self):
        """coefficient * initial monomial; the zero element maps to zero."""
        if not self.terms:
            return self
        m = min(self.terms)
        return GrassmannElement(self.n, {m: self.terms[m]}, _canonical=True)

    def __repr__(self):
        from .text import print_element

        return print_element(self)


def monomial(n: int, indices, coeff=1, field=QQ):
    """coeff * v_{indices}; unordered indices pick up the permutation sign."""
    seen = 0
    inv = 0
    for i in indices:
        if not isinstance(i, int) or not 1 <= i <= n:
            raise ValueError("generator index %r outside 1..%d" % (i, n))
        bit = 1 << (i - 1)
        if seen & bit:
            raise ValueError("generator index %d repeated" % i)
        inv += (seen >> i).bit_count()  # earlier indices above i
        seen |= bit
    c = field.coerce(coeff)
    if inv & 1:
        c = -c
    return GrassmannElement(n, {seen: c})


def generator(n: int, i: int, field=QQ):
    return monomial(n, (i,), 1, field)


def unit(n: int, field=QQ):
    return GrassmannElement(n, {0: field.one})


def zero(n: int) -> GrassmannElement:
    return GrassmannElement(n, {}, _canonical=True)
