"""Partial frames: the consistent elements of a d-frame together with ≺.

The reverse construction only looks at the partial frame's own structure
(⊑, ⊥, tt, ff and ≺), never at the d-frame it came from.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .dframe import DFrame
from .iso import find_isomorphism
from .lattice import FiniteLattice, build_lattice, fmt
from .report import Report


@dataclass(frozen=True)
class PartialFrame:
    elements: tuple
    kleq: frozenset      # ⊑ restricted to the carrier
    prec: frozenset      # x ≺ y
    bot: tuple
    tt: tuple
    ff: tuple
    name: str = "P"

    def below(self, x, y) -> bool:
        return (x, y) in self.kleq

    def precedes(self, x, y) -> bool:
        return (x, y) in self.prec


def partial_frame(D: DFrame) -> PartialFrame:
    T = D.twist
    carrier = tuple(D.con_elements())
    members = set(carrier)
    for x, y in product(carrier, repeat=2):
        for op in (T.kmeet, T.land, T.lor):
            assert op(x, y) in members, f"con not closed at {fmt(x)}, {fmt(y)}"
    kleq = frozenset((x, y) for x, y in product(carrier, repeat=2) if T.kleq(x, y))
    prec = frozenset((x, y) for x, y in product(carrier, repeat=2) if (y[0], x[1]) in D.tot)
    return PartialFrame(carrier, kleq, prec, T.bot, T.tt, T.ff, f"partial({D.name})")


def _interval(P: PartialFrame, hi, name) -> tuple[FiniteLattice, dict]:
    members = [x for x in P.elements if P.below(P.bot, x) and P.below(x, hi)]
    names = {x: fmt(x) for x in members}
    pairs = [(names[x], names[y]) for x, y in product(members, repeat=2)
             if x != y and P.below(x, y)]
    return build_lattice([names[x] for x in members], pairs, name), names


def dframe_from_partial(P: PartialFrame) -> DFrame:
    Lp, np_ = _interval(P, P.tt, "[⊥,tt]")
    Lm, nm = _interval(P, P.ff, "[⊥,ff]")
    con, tot = set(), set()
    for a, b in product(np_, nm):
        if any(P.below(a, c) and P.below(b, c) for c in P.elements):
            con.add((np_[a], nm[b]))
        if P.precedes(b, a):
            tot.add((np_[a], nm[b]))
    return DFrame(Lp, Lm, con, tot, f"from-{P.name}")


def partial_roundtrip(D: DFrame):
    """The isomorphism D ≅ dframe_from_partial(partial_frame(D)), or None."""
    return find_isomorphism(D, dframe_from_partial(partial_frame(D)))


def shulman_lhd(H: FiniteLattice, x, y) -> bool:
    """x ⊲ y iff x₊ ≤ y₊ and y₋ ∧ (y₊ → 0) ≤ x₋."""
    return H.leq(x[0], y[0]) and H.leq(H.meet(y[1], H.implies(y[0], H.bottom)), x[1])


def _first(it):
    return next(iter(it), None)


def prec_suite(N) -> Report:
    r = Report(f"≺ suite {N.name}")
    con = N.con_elements()
    tot = N.tot
    top = N.plus.top

    def prec(x, y):
        return (y[0], x[1]) in tot

    members = set(con)
    bad = _first(x for x in con if N.neg(x) not in members)
    r.add("¬ maps con into con", bad is None, fmt(bad) if bad else "")

    pairs = [(x, y) for x, y in product(con, repeat=2) if prec(x, y)]
    bad = _first((x, y) for x, y in pairs if N.weak_imp(x, y)[0] != top)
    r.add(f"x ≺ y ⇒ x⊃y valid ({len(pairs)} pairs)", bad is None, fmt(bad) if bad else "")
    bad = _first((x, y) for x, y in pairs if N.strong_imp(x, y)[0] != top)
    r.add(f"x ≺ y ⇒ x⇒y valid ({len(pairs)} pairs)", bad is None, fmt(bad) if bad else "")

    bad = _first((x, y, z) for x, y, z in product(con, repeat=3)
                 if prec(x, N.lor(N.neg(y), z)) and not prec(N.land(x, y), z))
    r.add("x ≺ ¬y∨·z ⇒ x∧·y ≺ z", bad is None, fmt(bad) if bad else "")
    bad = _first((x, y, z) for x, y, z in product(con, repeat=3)
                 if prec(N.land(x, N.neg(y)), z) and not prec(x, N.lor(y, z)))
    r.add("x∧·¬y ≺ z ⇒ x ≺ y∨·z", bad is None, fmt(bad) if bad else "")

    nn = {x: N.neg(N.neg(x)) for x in con}
    firsts = [(x, y, z) for x, y, z in product(con, repeat=3) if prec(x, N.lor(nn[y], z))]
    bad, count = None, 0
    for x, y, z in firsts:
        for x2, y2 in product(con, repeat=2):
            if prec(N.land(z, nn[x2]), y2):
                count += 1
                if not prec(N.land(x, x2), N.lor(y, y2)):
                    bad = (x, y, z, x2, y2)
                    break
        if bad:
            break
    r.add(f"cut rule ({count} premise instances)", bad is None, fmt(bad) if bad else "")

    if N.plus == N.minus:
        H = N.plus
        rel = {(x, y) for x, y in product(con, repeat=2) if shulman_lhd(H, x, y)}
        refl = all((x, x) in rel for x in con)
        trans = all((x, z) in rel for (x, y) in rel for (y2, z) in rel if y == y2)
        r.add("⊲ reflexive on con", refl, "observed" if refl else "not reflexive", info=True)
        r.add("⊲ transitive on con", trans, "observed" if trans else "not transitive", info=True)
        same = rel == {(x, y) for x, y in product(con, repeat=2) if prec(x, y)}
        r.add("⊲ coincides with ≺", same, f"|⊲| = {len(rel)}, |≺| = {len(pairs)}", info=True)
    return r
