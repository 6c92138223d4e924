"""Finite bounded lattices stored as explicit order matrices.

Every other module builds on :class:`FiniteLattice`.  Elements are arbitrary
hashable identifiers (normally strings); all tables and enumerations follow
the declared element order so output is deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import NotALattice, NotAPoset, NotHeyting, NotAHomomorphism, UnknownElement

Element = Hashable


def fmt(x) -> str:
    """Render an element (or a pair of elements) for reports."""
    if isinstance(x, tuple):
        return "(" + ",".join(fmt(y) for y in x) + ")"
    if isinstance(x, frozenset):
        return "{" + ",".join(sorted(fmt(y) for y in x)) + "}"
    return str(x)


class FiniteLattice:
    """A finite bounded lattice.

    Construct with :func:`build_lattice`; the constructor expects an already
    closed order matrix and derives meet/join tables, failing with
    :class:`NotALattice` when some pair has no meet or join.
    """

    def __init__(self, name: str, elements: Sequence[Element], leq: Sequence[Sequence[bool]]):
        self.name = name
        self.elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise NotAPoset(f"{name}: duplicate element identifiers")
        self._leq = tuple(tuple(bool(v) for v in row) for row in leq)
        self._meet, self._join = self._derive_tables()
        n = len(self.elements)
        self._bottom = next(i for i in range(n) if all(self._leq[i]))
        self._top = next(j for j in range(n) if all(self._leq[i][j] for i in range(n)))

    def _derive_tables(self):
        n = len(self.elements)
        if n == 0:
            raise NotALattice(f"{self.name}: empty carrier")
        leq = self._leq
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                lower = [k for k in range(n) if leq[k][i] and leq[k][j]]
                glb = [k for k in lower if all(leq[l][k] for l in lower)]
                upper = [k for k in range(n) if leq[i][k] and leq[j][k]]
                lub = [k for k in upper if all(leq[k][u] for u in upper)]
                if not glb:
                    raise NotALattice(
                        f"{self.name}: {fmt(self.elements[i])} and {fmt(self.elements[j])} have no meet")
                if not lub:
                    raise NotALattice(
                        f"{self.name}: {fmt(self.elements[i])} and {fmt(self.elements[j])} have no join")
                meet[i][j] = meet[j][i] = glb[0]
                join[i][j] = join[j][i] = lub[0]
        return tuple(map(tuple, meet)), tuple(map(tuple, join))

    # -- identity -----------------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._index

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.elements == other.elements and self._leq == other._leq

    def __hash__(self):
        return hash((self.elements, self._leq))

    def __repr__(self):
        return f"FiniteLattice({self.name!r}, {len(self)} elements)"

    # -- element access -------------------------------------------------------

    def index(self, x) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise UnknownElement(x, self.name) from None

    def leq(self, a, b) -> bool:
        return self._leq[self.index(a)][self.index(b)]

    def meet(self, a, b):
        return self.elements[self._meet[self.index(a)][self.index(b)]]

    def join(self, a, b):
        return self.elements[self._join[self.index(a)][self.index(b)]]

    def meet_all(self, xs: Iterable) -> Element:
        out = self.top
        for x in xs:
            out = self.meet(out, x)
        return out

    def join_all(self, xs: Iterable) -> Element:
        out = self.bottom
        for x in xs:
            out = self.join(out, x)
        return out

    @property
    def bottom(self):
        return self.elements[self._bottom]

    @property
    def top(self):
        return self.elements[self._top]

    def leq_matrix(self):
        return self._leq

    def meet_table(self):
        return self._meet

    def join_table(self):
        return self._join

    def order_pairs(self):
        """All pairs (a, b) with a <= b, in declared order."""
        return [(a, b) for a in self.elements for b in self.elements if self.leq(a, b)]

    # -- derived structure ----------------------------------------------------

    @cached_property
    def covers(self) -> tuple:
        """Hasse diagram edges (a, b) with b covering a."""
        n = len(self)
        leq = self._leq
        out = []
        for i in range(n):
            for j in range(n):
                if i != j and leq[i][j] and not any(
                        k not in (i, j) and leq[i][k] and leq[k][j] for k in range(n)):
                    out.append((self.elements[i], self.elements[j]))
        return tuple(out)

    @cached_property
    def heights(self) -> dict:
        """Length of the longest chain from bottom to each element."""
        below = {e: [a for a, b in self.covers if b == e] for e in self.elements}
        memo = {}

        def h(e):
            if e not in memo:
                memo[e] = max((h(a) + 1 for a in below[e]), default=0)
            return memo[e]

        return {e: h(e) for e in self.elements}

    @cached_property
    def distributivity_witness(self):
        """First triple (a, b, c) with a∧(b∨c) ≠ (a∧b)∨(a∧c), or None."""
        n = len(self)
        m, j = self._meet, self._join
        for a, b, c in product(range(n), repeat=3):
            if m[a][j[b][c]] != j[m[a][b]][m[a][c]]:
                return (self.elements[a], self.elements[b], self.elements[c])
        return None

    @cached_property
    def implication_table(self) -> dict:
        """Heyting implication, cached for modules that evaluate it heavily."""
        if self.distributivity_witness is not None:
            raise NotHeyting(f"{self.name} is not distributive")
        return {(a, b): _scan_implies(self, a, b) for a in self.elements for b in self.elements}

    def implies(self, a, b):
        return self.implication_table[(a, b)]

    def pseudocomplement(self, a):
        return self.implies(a, self.bottom)

    def complements(self, a) -> list:
        return [b for b in self.elements
                if self.meet(a, b) == self.bottom and self.join(a, b) == self.top]

    def interval(self, lo, hi) -> list:
        return [x for x in self.elements if self.leq(lo, x) and self.leq(x, hi)]

    @cached_property
    def _directed_subsets(self):
        # Exponential in |L|; fine for the <=12 element fixtures.
        n = len(self)
        leq, join = self._leq, self._join
        out = []
        for mask in range(1, 1 << n):
            members = [i for i in range(n) if mask >> i & 1]
            ok = all(any(leq[a][c] and leq[b][c] for c in members)
                     for a, b in combinations(members, 2))
            if ok:
                top = members[0]
                for k in members[1:]:
                    top = join[top][k]
                out.append((tuple(members), top))
        return tuple(out)


def build_lattice(elements: Sequence[Element], order_pairs: Iterable[tuple] = (),
                  name: str = "L") -> FiniteLattice:
    """Close ``order_pairs`` reflexively and transitively and build the lattice.

    Raises NotAPoset if the closure is not antisymmetric and NotALattice if a
    pair lacks a meet or join.
    """
    elements = tuple(elements)
    if not elements:
        raise NotALattice(f"{name}: elements must be non-empty")
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise NotAPoset(f"{name}: duplicate element identifiers")
    n = len(elements)
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in order_pairs:
        if a not in index:
            raise UnknownElement(a, name)
        if b not in index:
            raise UnknownElement(b, name)
        leq[index[a]][index[b]] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                row_k = leq[k]
                row_i = leq[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    for i in range(n):
        for j in range(i + 1, n):
            if leq[i][j] and leq[j][i]:
                raise NotAPoset(
                    f"{name}: {fmt(elements[i])} <= {fmt(elements[j])} <= {fmt(elements[i])}")
    return FiniteLattice(name, elements, leq)


def lattice_from_leq(elements: Sequence[Element], leq, name: str = "L") -> FiniteLattice:
    """Build from a predicate ``leq(a, b)`` that is already a partial order."""
    pairs = [(a, b) for a in elements for b in elements if a != b and leq(a, b)]
    return build_lattice(elements, pairs, name)


_OPS = {"meet", "join", "leq"}


def lattice_eval(L: FiniteLattice, op: str, a, b):
    if op not in _OPS:
        raise ValueError(f"unknown lattice operation {op!r}; expected one of {sorted(_OPS)}")
    return getattr(L, op)(a, b)


def is_distributive(L: FiniteLattice) -> bool:
    return L.distributivity_witness is None


def _scan_implies(L: FiniteLattice, a, b):
    candidates = [x for x in L.elements if L.leq(L.meet(a, x), b)]
    best = L.join_all(candidates)
    if best not in candidates:
        raise NotHeyting(f"{L.name}: no largest x with {fmt(a)}∧x <= {fmt(b)}")
    return best


def heyting_implies(L: FiniteLattice, a, b):
    """Largest x with a∧x <= b."""
    L.index(a), L.index(b)
    if not is_distributive(L):
        raise NotHeyting(f"{L.name} is not distributive")
    return _scan_implies(L, a, b)


def is_boolean(L: FiniteLattice) -> bool:
    return is_distributive(L) and all(L.complements(x) for x in L.elements)


def way_below(L: FiniteLattice, k, l) -> bool:
    """k ≪ l by enumerating every directed subset of L.

    On a finite lattice every directed subset contains its join, so this
    coincides with k <= l; the enumeration is kept so that the coincidence is
    a tested fact rather than an assumption.
    """
    ki, li = L.index(k), L.index(l)
    leq = L.leq_matrix()
    for members, top in L._directed_subsets:
        if leq[li][top] and not any(leq[ki][a] for a in members):
            return False
    return True


def product_lattice(A: FiniteLattice, B: FiniteLattice, name: str | None = None) -> FiniteLattice:
    short = all(len(str(x)) == 1 for x in A.elements + B.elements)

    def label(a, b):
        return f"{a}{b}" if short else f"({a},{b})"

    elements = [label(a, b) for a in A.elements for b in B.elements]
    pairs = [(label(a, b), label(c, d))
             for (a, b) in product(A.elements, B.elements)
             for (c, d) in product(A.elements, B.elements)
             if (a, b) != (c, d) and A.leq(a, c) and B.leq(b, d)]
    return build_lattice(elements, pairs, name or f"{A.name}x{B.name}")


@dataclass(frozen=True)
class LatticeMap:
    """A total map between the carriers of two lattices."""

    source: FiniteLattice
    target: FiniteLattice
    table: Mapping

    def __post_init__(self):
        table = dict(self.table)
        for x in self.source.elements:
            if x not in table:
                raise UnknownElement(x, f"domain of map {self.source.name}->{self.target.name}")
        for x, y in table.items():
            if x not in self.source:
                raise UnknownElement(x, self.source.name)
            if y not in self.target:
                raise UnknownElement(y, self.target.name)
        ordered = {x: table[x] for x in self.source.elements}
        object.__setattr__(self, "table", ordered)

    def __call__(self, x):
        try:
            return self.table[x]
        except KeyError:
            raise UnknownElement(x, self.source.name) from None

    def __eq__(self, other):
        if not isinstance(other, LatticeMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.table == other.table)

    def __hash__(self):
        return hash(tuple(self.table.items()))

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.table)

    def is_surjective(self) -> bool:
        return set(self.table.values()) == set(self.target.elements)

    def homomorphism_violation(self, joins: bool = True):
        """Describe the first failure of bound/meet/join preservation, or None."""
        S, T = self.source, self.target
        if self(S.top) != T.top:
            return f"top maps to {fmt(self(S.top))}"
        if self(S.bottom) != T.bottom:
            return f"bottom maps to {fmt(self(S.bottom))}"
        for a, b in product(S.elements, repeat=2):
            if self(S.meet(a, b)) != T.meet(self(a), self(b)):
                return f"meet of {fmt(a)},{fmt(b)} not preserved"
            if joins and self(S.join(a, b)) != T.join(self(a), self(b)):
                return f"join of {fmt(a)},{fmt(b)} not preserved"
        return None

    def require_homomorphism(self):
        problem = self.homomorphism_violation()
        if problem:
            raise NotAHomomorphism(problem)

    def compose(self, inner: "LatticeMap") -> "LatticeMap":
        """self ∘ inner."""
        return LatticeMap(inner.source, self.target, {x: self(inner(x)) for x in inner.source.elements})


def identity_map(L: FiniteLattice) -> LatticeMap:
    return LatticeMap(L, L, {x: x for x in L.elements})
