"""Families of subsets of {1..n} and exact maximum intersecting searches.

Members are bitmasks (index i on bit i-1).  The searches are maximum
clique computations on the graph whose vertices are candidate sets and
whose edges join sets with nonempty intersection.  Branch and bound,
deterministic: vertices are tried in ascending mask order, the bound is
a greedy coloring count (plus complement pair counting when the ground
size is even and candidates are closed under complement).  The reported
certificate is therefore the first maximum family in DFS order.  A node
budget caps the work; running out raises, it never degrades silently.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "SetFamily",
    "SearchResult",
    "SearchBudgetExceeded",
    "is_intersecting",
    "is_odd_family",
    "all_odd_masks",
    "odd_upper_levels",
    "star",
    "max_odd_intersecting",
    "enumerate_max_odd_intersecting",
    "ekr_max",
    "two_level_max",
    "two_level_maxima",
]

DEFAULT_BUDGET = 2_000_000


def _mask_of(indices, n):
    mask = 0
    for i in indices:
        if not isinstance(i, int) or not 1 <= i <= n:
            raise ValueError("index %r outside 1..%d" % (i, n))
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError("index %d repeated inside one set" % i)
        mask |= bit
    return mask


def _indices_of(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class SetFamily:
    """An unordered family of distinct subsets of {1..n}."""

    __slots__ = ("n", "masks")

    def __init__(self, n: int, masks):
        if not isinstance(n, int) or not 1 <= n <= 16:
            raise ValueError("ground set size must be in 1..16, got %r" % (n,))
        top = 1 << n
        ms = sorted(set(masks))
        for m in ms:
            if not isinstance(m, int) or not 0 <= m < top:
                raise ValueError("member mask %r out of range for n=%d" % (m, n))
        self.n = n
        self.masks = tuple(ms)

    @classmethod
    def from_sets(cls, n: int, sets):
        return cls(n, (_mask_of(s, n) for s in sets))

    def to_sets(self) -> list:
        """JSON-ready: a list of ascending index lists, members in mask order."""
        return [_indices_of(m) for m in self.masks]

    def __len__(self):
        return len(self.masks)

    def __iter__(self):
        return iter(self.masks)

    def __contains__(self, mask):
        return mask in self.masks

    def __eq__(self, other):
        return isinstance(other, SetFamily) and other.n == self.n and other.masks == self.masks

    def __hash__(self):
        return hash((self.n, self.masks))

    def __repr__(self):
        return "SetFamily(n=%d, %r)" % (self.n, self.to_sets())


def is_intersecting(fam: SetFamily) -> bool:
    """Every two members meet; a family containing the empty set never does."""
    ms = fam.masks
    for i, a in enumerate(ms):
        for b in ms[i:]:
            if not a & b:
                return False
    return True


def is_odd_family(fam: SetFamily) -> bool:
    return all(m.bit_count() & 1 for m in fam.masks)


def all_odd_masks(n: int) -> list:
    return [m for m in range(1, 1 << n) if m.bit_count() & 1]


def odd_upper_levels(n: int) -> SetFamily:
    """All sets of odd size i with 2i > n."""
    return SetFamily(n, (m for m in range(1, 1 << n) if m.bit_count() & 1 and 2 * m.bit_count() > n))


def star(n: int, k: int, l: int) -> SetFamily:
    """All k-sets through the point l."""
    if not 1 <= l <= n:
        raise ValueError("star element %r outside 1..%d" % (l, n))
    bit = 1 << (l - 1)
    return SetFamily(n, (m for m in range(1 << n) if m & bit and m.bit_count() == k))


@dataclass(frozen=True)
class SearchResult:
    size: int
    family: SetFamily
    nodes: int


class SearchBudgetExceeded(RuntimeError):
    """Node budget ran out. .partial holds the best family found so far."""

    def __init__(self, budget: int, partial: SearchResult):
        super().__init__(
            "search budget of %d nodes exhausted (best found so far: %d)" % (budget, partial.size)
        )
        self.budget = budget
        self.partial = partial


class _CliqueSearch:
    """Maximum clique over candidate masks, edges = nonempty intersection."""

    def __init__(self, n, cands, budget):
        self.n = n
        self.cands = list(cands)
        self.budget = budget
        m = len(self.cands)
        adj = [0] * m
        for a in range(m):
            ma = self.cands[a]
            for b in range(a + 1, m):
                if ma & self.cands[b]:
                    adj[a] |= 1 << b
                    adj[b] |= 1 << a
        self.adj = adj
        # complement pairing applies when candidates are closed under complement
        full = (1 << n) - 1
        pos = {c: i for i, c in enumerate(self.cands)}
        self.comp = [pos.get(full ^ c, -1) for c in self.cands]
        self.paired = all(c >= 0 for c in self.comp) and m > 0
        self.nodes = 0
        self.best_size = 0
        self.best = []
        self.stack = []

    def _color_count(self, p):
        cnt = 0
        while p:
            cnt += 1
            q = p
            while q:
                lsb = q & -q
                v = lsb.bit_length() - 1
                p &= ~lsb
                q &= ~self.adj[v]
                q &= ~lsb
        return cnt

    def _pair_count(self, p):
        cnt = 0
        seen = 0
        q = p
        while q:
            lsb = q & -q
            v = lsb.bit_length() - 1
            q &= q - 1
            if seen & lsb:
                continue
            cnt += 1
            seen |= lsb
            c = self.comp[v]
            if c >= 0:
                seen |= 1 << c
        return cnt

    def _bound(self, p):
        b = self._color_count(p)
        if self.paired:
            pb = self._pair_count(p)
            if pb < b:
                b = pb
        return b

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(self.budget, self.result())

    def result(self):
        fam = SetFamily(self.n, [self.cands[v] for v in self.best])
        return SearchResult(size=self.best_size, family=fam, nodes=self.nodes)

    def _expand(self, p):
        self._tick()
        depth = len(self.stack)
        if depth > self.best_size:
            self.best_size = depth
            self.best = list(self.stack)
        if not p:
            return
        if depth + self._bound(p) <= self.best_size:
            return
        it = p
        while it:
            if depth + it.bit_count() <= self.best_size:
                break
            lsb = it & -it
            v = lsb.bit_length() - 1
            it &= it - 1
            p &= ~lsb
            self.stack.append(v)
            self._expand(p & self.adj[v])
            self.stack.pop()

    def run(self) -> SearchResult:
        self._expand((1 << len(self.cands)) - 1)
        return self.result()

    def enumerate_maxima(self, target):
        out = []

        def walk(p):
            self._tick()
            depth = len(self.stack)
            if depth == target:
                out.append(SetFamily(self.n, [self.cands[v] for v in self.stack]))
                return
            if depth + self._bound(p) < target:
                return
            it = p
            while it:
                if depth + it.bit_count() < target:
                    break
                lsb = it & -it
                v = lsb.bit_length() - 1
                it &= it - 1
                p &= ~lsb
                self.stack.append(v)
                walk(p & self.adj[v])
                self.stack.pop()

        walk((1 << len(self.cands)) - 1)
        return out


def _resolve_budget(budget):
    if budget is None:
        return DEFAULT_BUDGET
    if not isinstance(budget, int) or budget < 1:
        raise ValueError("budget must be a positive node count, got %r" % (budget,))
    return budget


def max_odd_intersecting(n: int, budget=None) -> SearchResult:
    """Exact maximum size of an intersecting family of odd subsets of {1..n}.

    Default budget covers n <= 7; pass an explicit budget for larger n."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("ground set size must be a positive int, got %r" % (n,))
    if n > 7 and budget is None:
        raise ValueError("n=%d needs an explicit search budget (default covers n <= 7)" % n)
    search = _CliqueSearch(n, all_odd_masks(n), _resolve_budget(budget))
    return search.run()


def enumerate_max_odd_intersecting(n: int, budget=None) -> list:
    """Every maximum family, n <= 5 only (the catalog grows fast)."""
    if n > 5:
        raise ValueError("maxima enumeration is supported for n <= 5 only")
    search = _CliqueSearch(n, all_odd_masks(n), _resolve_budget(budget))
    top = search.run()
    search.nodes = 0
    return search.enumerate_maxima(top.size)


def ekr_max(n: int, k: int, budget=None) -> int:
    """Maximum intersecting family inside one level of k-sets, 2k <= n <= 12."""
    if not isinstance(n, int) or not 1 <= n <= 12:
        raise ValueError("n must be in 1..12, got %r" % (n,))
    if not isinstance(k, int) or k < 1 or 2 * k > n:
        raise ValueError("level k must satisfy 1 <= k <= n/2, got %r" % (k,))
    cands = [m for m in range(1 << n) if m.bit_count() == k]
    search = _CliqueSearch(n, cands, _resolve_budget(budget))
    return search.run().size


def _two_level_cands(n, i):
    if not isinstance(n, int) or n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and at least 3, got %r" % (n,))
    if not isinstance(i, int) or i < 1 or i % 2 == 0 or not 2 * i < n - 2:
        raise ValueError("level i must be odd with i < n/2 - 1, got %r" % (i,))
    j = n - i - 1
    return [m for m in range(1 << n) if m.bit_count() in (i, j)]


def two_level_max(n: int, i: int, budget=None) -> int:
    """Maximum intersecting family using only sizes i and n-i-1 (both odd)."""
    search = _CliqueSearch(n, _two_level_cands(n, i), _resolve_budget(budget))
    return search.run().size


def two_level_maxima(n: int, i: int, budget=None) -> list:
    """All maximum two-level families; sized for small n only."""
    cands = _two_level_cands(n, i)
    if len(cands) > 40:
        raise ValueError("two-level maxima enumeration limited to 40 candidates")
    search = _CliqueSearch(n, cands, _resolve_budget(budget))
    top = search.run()
    search.nodes = 0
    return search.enumerate_maxima(top.size)
