"""Small named lattices used as test fixtures and CLI defaults."""
from __future__ import annotations

from fractions import Fraction

from .lattice import FiniteLattice, build_lattice, product_lattice


def _chain_label(i: int, n: int) -> str:
    if i == 0:
        return "0"
    if i == n - 1:
        return "1"
    return str(Fraction(i, n - 1))


def chain(n: int, name: str | None = None) -> FiniteLattice:
    """The n-element chain 0 < 1/(n-1) < ... < 1."""
    if n < 1:
        raise ValueError("a chain needs at least one element")
    if n == 1:
        return build_lattice(["0"], (), name or "C1")
    elements = [_chain_label(i, n) for i in range(n)]
    pairs = list(zip(elements, elements[1:]))
    return build_lattice(elements, pairs, name or f"C{n}")


def two() -> FiniteLattice:
    return chain(2, "2")


def m3() -> FiniteLattice:
    els = ["0", "a", "b", "c", "1"]
    pairs = [("0", x) for x in "abc"] + [(x, "1") for x in "abc"]
    return build_lattice(els, pairs, "M3")


def n5() -> FiniteLattice:
    els = ["0", "a", "b", "c", "1"]
    pairs = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]
    return build_lattice(els, pairs, "N5")


def square() -> FiniteLattice:
    """2×2, the four-element Boolean algebra."""
    return product_lattice(two(), two(), "2x2")


def two_by_three() -> FiniteLattice:
    return product_lattice(two(), chain(3), "2x3")


def heyting_fixtures() -> list[FiniteLattice]:
    """Distributive fixtures used for exhaustive Chu checks."""
    return [chain(2), chain(3), chain(4), chain(5), square(), two_by_three()]


# -- structure families built on the lattices above ----------------------------

def bilattice_fixtures() -> list:
    """Twist bilattices of C2–C4 and 2×2 (all interlaced and distributive)."""
    from .bilattice import AbstractBilattice, twist_construct

    return [AbstractBilattice.from_twist(twist_construct(L), f"twist({L.name})")
            for L in (chain(2), chain(3), chain(4), square())]


def bispace_fixtures() -> list:
    from .dframe import BitopSpace

    return [
        BitopSpace((), [set()], [set()]),
        BitopSpace(("x",), [set(), {"x"}], [set(), {"x"}]),
        BitopSpace(("x", "y"), [set(), {"x"}, {"x", "y"}], [set(), {"y"}, {"x", "y"}]),
        BitopSpace(("x", "y", "z"), [set(), {"x"}, {"x", "y"}, {"x", "y", "z"}],
                   [set(), {"z"}, {"y", "z"}, {"x", "y", "z"}]),
    ]


def injection_fixtures() -> list:
    from .lattice import LatticeMap

    c3, c4 = chain(3), chain(4)
    return [
        LatticeMap(two(), c3, {"0": "0", "1": "1"}),
        LatticeMap(two(), square(), {"0": "00", "1": "11"}),
        LatticeMap(c3, c4, {"0": "0", "1/2": "1/3", "1": "1"}),
    ]


def dframe_fixtures() -> list:
    from .dframe import canonical_relations, dframe_from_bispace

    out = [dframe_from_bispace(X, f"bispace{len(X.points)}") for X in bispace_fixtures()]
    for L in (chain(2), chain(3), chain(4), square()):
        out.append(canonical_relations(L, kind="twist"))
        out.append(canonical_relations(L, kind="trivial"))
    return out


def ndframe_fixtures() -> list:
    """Identity twists and injection-built frames, plus one bispace frame where p∘m ≠ id."""
    from .dframe import identity_ndframe, ndframe_from_bispace, ndframe_from_injection

    out = [identity_ndframe(L) for L in (chain(2), chain(3), chain(4), square())]
    out += [ndframe_from_injection(m) for m in injection_fixtures()]
    out.append(ndframe_from_bispace(bispace_fixtures()[2], "bispace2"))
    return out


def schedule_fixtures() -> list:
    from .lvars import Get, JoinSemilattice, Put, Schedule, freely_add_order

    flat = freely_add_order(range(10))
    c5 = JoinSemilattice.from_lattice(chain(5))
    return [
        Schedule(flat, [[Put("3")], [Put("3")]], "same value"),
        Schedule(flat, [[Put("3")], [Put("5")]], "3 vs 5"),
        Schedule(flat, [[Put("3")], [Get(("3",))]], "read after write"),
        Schedule(flat, [[Put("3"), Get(("5",))], [Put("3")]], "never reached"),
        Schedule(flat, [[Put("1")], [Put("2")], [Put("3")]], "three writers"),
        Schedule(flat, [[Get(("3", "5")), Put("3")], [Put("3"), Get(("3",))], [Get(("3", "7"))]],
                 "threshold sets"),
        Schedule(c5, [[Put("1/4"), Get(("1/2",)), Put("3/4")], [Put("1/2"), Get(("1/4",))],
                      [Get(("3/4",)), Put("1/4"), Put("1/2")]], "climb"),
        Schedule(c5, [[Put("1/4"), Put("1/2")], [Put("3/4"), Get(("1/2",))],
                      [Put("1/4"), Get(("3/4",))], [Put("1/2")]], "four threads"),
    ]
