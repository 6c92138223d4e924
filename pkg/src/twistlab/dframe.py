"""d-Frames, nd-frames and their constructions.

Finite frames are exactly finite distributive lattices, so every component
lattice here is required to be distributive.  Checkers enumerate every
instantiation of each axiom and report witnesses instead of raising.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .bilattice import TwistAlgebra
from .errors import (NotATopology, NotAHomomorphism, NotHeyting, NotInjective, NotPMId,
                     TwistNeedsSymmetric)
from .lattice import FiniteLattice, LatticeMap, build_lattice, fmt, identity_map, is_distributive
from .report import Report


@dataclass(frozen=True)
class DFrame:
    plus: FiniteLattice
    minus: FiniteLattice
    con: frozenset
    tot: frozenset
    name: str = field(default="D", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "con", frozenset(self.con))
        object.__setattr__(self, "tot", frozenset(self.tot))

    @property
    def twist(self) -> TwistAlgebra:
        return TwistAlgebra(self.plus, self.minus)

    def pairs(self):
        return [(a, b) for a in self.plus.elements for b in self.minus.elements]

    @property
    def ff(self):
        return (self.plus.bottom, self.minus.top)

    @property
    def tt(self):
        return (self.plus.top, self.minus.bottom)

    def con_elements(self):
        """con in declared pair order."""
        return [x for x in self.pairs() if x in self.con]


@dataclass(frozen=True)
class NdFrame:
    """A d-frame with p: L₋ → L₊ and m: L₊ → L₋."""

    base: DFrame
    p: LatticeMap
    m: LatticeMap
    name: str = field(default="N", compare=False)

    plus = property(lambda self: self.base.plus)
    minus = property(lambda self: self.base.minus)
    con = property(lambda self: self.base.con)
    tot = property(lambda self: self.base.tot)
    ff = property(lambda self: self.base.ff)
    tt = property(lambda self: self.base.tt)

    def pairs(self):
        return self.base.pairs()

    def con_elements(self):
        return self.base.con_elements()

    def neg(self, x):
        return (self.p(x[1]), self.m(x[0]))

    def weak_imp(self, x, y):
        return (self.plus.implies(x[0], y[0]), self.minus.meet(self.m(x[0]), y[1]))

    def land(self, x, y):
        return (self.plus.meet(x[0], y[0]), self.minus.join(x[1], y[1]))

    def lor(self, x, y):
        return (self.plus.join(x[0], y[0]), self.minus.meet(x[1], y[1]))

    def kmeet(self, x, y):
        return (self.plus.meet(x[0], y[0]), self.minus.meet(x[1], y[1]))

    def kjoin(self, x, y):
        return (self.plus.join(x[0], y[0]), self.minus.join(x[1], y[1]))

    def strong_imp(self, x, y):
        return self.land(self.weak_imp(x, y), self.weak_imp(self.neg(y), self.neg(x)))

    def pm_is_identity(self) -> bool:
        return all(self.p(self.m(a)) == a for a in self.plus.elements)

    def p_preserves_joins(self) -> bool:
        L, M = self.plus, self.minus
        return all(self.p(M.join(a, b)) == L.join(self.p(a), self.p(b))
                   for a, b in product(M.elements, repeat=2))


# -- checkers ------------------------------------------------------------------

def _first(it):
    return next(iter(it), None)


def check_dframe(D: DFrame) -> Report:
    r = Report(f"d-frame {D.name}")
    T = D.twist
    P = D.pairs()
    all_pairs = set(P)
    stray = [x for x in D.con | D.tot if x not in all_pairs]
    r.add("relations lie in L₊×L₋", not stray, fmt(stray[0]) if stray else "")
    for rel_name, rel in (("con", D.con), ("tot", D.tot)):
        for const_name, const in (("f", D.ff), ("t", D.tt)):
            r.add(f"axiom 1: {rel_name} contains {const_name}", const in rel,
                  "" if const in rel else f"{fmt(const)} missing")
        for op_name, op in (("∧·", T.land), ("∨·", T.lor)):
            bad = _first((x, y) for x, y in product(sorted(rel, key=P.index), repeat=2)
                         if op(x, y) not in rel)
            r.add(f"axiom 1: {rel_name} closed under {op_name}", bad is None,
                  f"{fmt(bad[0])} {op_name} {fmt(bad[1])}" if bad else "")
    bad = _first((x, y) for x in D.con for y in P if T.kleq(y, x) and y not in D.con)
    r.add("axiom 2: con ⊑-downward closed", bad is None,
          f"{fmt(bad[1])} ⊑ {fmt(bad[0])}" if bad else "")
    bad = _first((x, y) for x in D.tot for y in P if T.kleq(x, y) and y not in D.tot)
    r.add("axiom 2: tot ⊑-upward closed", bad is None,
          f"{fmt(bad[0])} ⊑ {fmt(bad[1])}" if bad else "")
    # finite directed sets contain their join; the chain check below is what
    # remains of the axiom on finite carriers
    bad = _first((x, y) for x, y in product(D.con, repeat=2)
                 if (T.kleq(x, y) or T.kleq(y, x)) and T.kjoin(x, y) not in D.con)
    r.add("axiom 3: con closed under directed joins", bad is None,
          f"{fmt(bad[0])} ⊔ {fmt(bad[1])}" if bad else "")
    L, M = D.plus, D.minus
    bad = _first(((a, b), c) for (a, b) in D.con for c in M.elements
                 if (a, c) in D.tot and not M.leq(b, c))
    r.add("axiom 4: con(a,b) ∧ tot(a,c) ⇒ b ≤ c", bad is None, fmt(bad) if bad else "")
    bad = _first(((a, b), c) for (a, b) in D.con for c in L.elements
                 if (c, b) in D.tot and not L.leq(a, c))
    r.add("axiom 4: con(a,b) ∧ tot(c,b) ⇒ a ≤ c", bad is None, fmt(bad) if bad else "")
    return r


def check_ndframe(N: NdFrame) -> Report:
    r = Report(f"nd-frame {N.name}")
    L, M, p, m = N.plus, N.minus, N.p, N.m
    con, tot = N.con, N.tot

    bad = _first((a, b) for a, b in product(M.elements, repeat=2) if p(M.meet(a, b)) != L.meet(p(a), p(b)))
    r.add("axiom 1: p preserves ∧", bad is None, fmt(bad) if bad else "")
    bad = _first((a, b) for a, b in product(L.elements, repeat=2) if m(L.meet(a, b)) != M.meet(m(a), m(b)))
    r.add("axiom 1: m preserves ∧", bad is None, fmt(bad) if bad else "")
    r.add("axiom 2: p(1) = 1", p(M.top) == L.top, fmt(p(M.top)))
    r.add("axiom 2: m(1) = 1", m(L.top) == M.top, fmt(m(L.top)))
    r.add("axiom 3: p(0) = 0", p(M.bottom) == L.bottom, fmt(p(M.bottom)))
    r.add("axiom 3: m(0) = 0", m(L.bottom) == M.bottom, fmt(m(L.bottom)))
    bad = _first(a for a in L.elements if not L.leq(p(m(a)), a))
    r.add("axiom 4: p(m(a)) ≤ a", bad is None, fmt(bad) if bad is not None else "")
    bad = _first(b for b in M.elements if not M.leq(m(p(b)), b))
    r.add("axiom 4: m(p(b)) ≤ b", bad is None, fmt(bad) if bad is not None else "")

    bad = _first((a, b, c) for a, b, c in product(L.elements, L.elements, M.elements)
                 if (L.meet(a, b), c) in con and (a, M.meet(m(b), c)) not in con)
    r.add("axiom 5: (a∧b,c)∈con ⇒ (a,m(b)∧c)∈con", bad is None, fmt(bad) if bad else "")
    bad = _first((a, b, c) for a, b, c in product(L.elements, M.elements, M.elements)
                 if (a, M.meet(b, c)) in con and (L.meet(a, p(b)), c) not in con)
    r.add("axiom 5: (a,b∧c)∈con ⇒ (a∧p(b),c)∈con", bad is None, fmt(bad) if bad else "")
    bad = _first((a, b, c) for a, b, c in product(L.elements, L.elements, M.elements)
                 if (a, M.join(m(b), c)) in tot and (L.join(a, b), c) not in tot)
    r.add("axiom 6: (a,m(b)∨c)∈tot ⇒ (a∨b,c)∈tot", bad is None, fmt(bad) if bad else "")
    bad = _first((a, b, c) for a, b, c in product(L.elements, M.elements, M.elements)
                 if (L.join(a, p(b)), c) in tot and (a, M.join(b, c)) not in tot)
    r.add("axiom 6: (a∨p(b),c)∈tot ⇒ (a,b∨c)∈tot", bad is None, fmt(bad) if bad else "")
    return r


# -- canonical constructions ---------------------------------------------------

def canonical_relations(plus: FiniteLattice, minus: FiniteLattice | None = None,
                        kind: str = "twist", name: str | None = None) -> DFrame:
    """The twist relations (a∧b = 0, a∨b = 1) or the trivial ones (a = 0 or b = 0, ...)."""
    minus = plus if minus is None else minus
    pairs = list(product(plus.elements, minus.elements))
    if kind == "twist":
        if plus != minus:
            raise TwistNeedsSymmetric("twist relations need L₊ = L₋")
        con = {(a, b) for a, b in pairs if plus.meet(a, b) == plus.bottom}
        tot = {(a, b) for a, b in pairs if plus.join(a, b) == plus.top}
    elif kind == "trivial":
        con = {(a, b) for a, b in pairs if a == plus.bottom or b == minus.bottom}
        tot = {(a, b) for a, b in pairs if a == plus.top or b == minus.top}
    else:
        raise ValueError(f"unknown relation kind {kind!r}")
    return DFrame(plus, minus, con, tot, name or f"{kind}({plus.name},{minus.name})")


def identity_ndframe(L: FiniteLattice, name: str | None = None) -> NdFrame:
    """L⋈ with twist relations and p = m = id."""
    if not is_distributive(L):
        raise NotHeyting(f"{L.name} is not a frame")
    D = canonical_relations(L, L, "twist")
    return NdFrame(D, identity_map(L), identity_map(L), name or f"id-twist({L.name})")


@dataclass(frozen=True)
class BitopSpace:
    points: tuple
    tau_plus: frozenset
    tau_minus: frozenset

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        for attr in ("tau_plus", "tau_minus"):
            tau = frozenset(frozenset(U) for U in getattr(self, attr))
            object.__setattr__(self, attr, tau)
            full = frozenset(self.points)
            if frozenset() not in tau or full not in tau:
                raise NotATopology(f"{attr} must contain ∅ and the whole space")
            for U, V in product(tau, repeat=2):
                if not U <= full:
                    raise NotATopology(f"{attr}: open set outside the space")
                if U | V not in tau or U & V not in tau:
                    raise NotATopology(f"{attr} not closed under union/intersection")

    def open_name(self, U) -> str:
        return "{" + ",".join(str(x) for x in self.points if x in U) + "}"

    def frame(self, attr: str, name: str) -> tuple[FiniteLattice, dict]:
        tau = sorted(getattr(self, attr), key=lambda U: (len(U), self.open_name(U)))
        names = {U: self.open_name(U) for U in tau}
        pairs = [(names[U], names[V]) for U in tau for V in tau if U < V]
        return build_lattice([names[U] for U in tau], pairs, name), names


def dframe_from_bispace(X: BitopSpace, name: str = "bispace") -> DFrame:
    Lp, np_ = X.frame("tau_plus", "τ₊")
    Lm, nm = X.frame("tau_minus", "τ₋")
    full = frozenset(X.points)
    con = {(np_[U], nm[V]) for U in X.tau_plus for V in X.tau_minus if not U & V}
    tot = {(np_[U], nm[V]) for U in X.tau_plus for V in X.tau_minus if U | V == full}
    return DFrame(Lp, Lm, con, tot, name)


def ndframe_from_bispace(X: BitopSpace, name: str = "bispace") -> NdFrame:
    """The bispace d-frame with p, m given by interiors in the other topology."""
    D = dframe_from_bispace(X, name)
    _, np_ = X.frame("tau_plus", "τ₊")
    _, nm = X.frame("tau_minus", "τ₋")

    def interior(U, tau):
        out = frozenset()
        for V in tau:
            if V <= U:
                out |= V
        return out

    m = {np_[U]: nm[interior(U, X.tau_minus)] for U in X.tau_plus}
    p = {nm[V]: np_[interior(V, X.tau_plus)] for V in X.tau_minus}
    return NdFrame(D, LatticeMap(D.minus, D.plus, p), LatticeMap(D.plus, D.minus, m), name)


# -- injective homomorphisms ---------------------------------------------------

def right_adjoint(m: LatticeMap) -> LatticeMap:
    """p(b) = the largest a with m(a) <= b."""
    L, M = m.source, m.target
    table = {}
    for b in M.elements:
        below = [a for a in L.elements if M.leq(m(a), b)]
        best = L.join_all(below)
        if not M.leq(m(best), b):
            raise NotAHomomorphism(f"m has no right adjoint at {fmt(b)}")
        table[b] = best
    return LatticeMap(M, L, table)


def ndframe_from_injection(m: LatticeMap, name: str | None = None) -> NdFrame:
    L, M = m.source, m.target
    for K in (L, M):
        if not is_distributive(K):
            raise NotHeyting(f"{K.name} is not a frame")
    if not m.is_injective():
        raise NotInjective("m is not injective")
    m.require_homomorphism()
    pairs = list(product(L.elements, M.elements))
    con = {(a, b) for a, b in pairs if M.meet(m(a), b) == M.bottom}
    tot = {(a, b) for a, b in pairs if M.join(m(a), b) == M.top}
    nm = name or f"inj({L.name}→{M.name})"
    return NdFrame(DFrame(L, M, con, tot, nm), right_adjoint(m), m, nm)


def injection_from_ndframe(N: NdFrame) -> LatticeMap:
    if not N.pm_is_identity():
        bad = next(a for a in N.plus.elements if N.p(N.m(a)) != a)
        raise NotPMId(f"p(m({fmt(bad)})) = {fmt(N.p(N.m(bad)))}")
    return N.m


def factor_homomorphism(h: LatticeMap) -> tuple[LatticeMap, LatticeMap]:
    """Split h into a surjection onto its image followed by the inclusion."""
    h.require_homomorphism()
    T = h.target
    image = set(h.table.values())
    els = [y for y in T.elements if y in image]
    sub = build_lattice(els, [(a, b) for a in els for b in els if a != b and T.leq(a, b)],
                        f"im({h.source.name}→{T.name})")
    surj = LatticeMap(h.source, sub, h.table)
    inj = LatticeMap(sub, T, {y: y for y in els})
    return surj, inj
