"""Twist algebras, abstract bilattices and the interlaced representation."""
from __future__ import annotations

from itertools import product

from .errors import (ConnectiveUnavailable, NotABilattice, NotInterlaced,
                     RepresentationCheckFailed, UnknownElement)
from .lattice import FiniteLattice, build_lattice, fmt, is_distributive

# connective symbol -> method name; ASCII spellings are accepted too
CONNECTIVES = {
    "⊓": "kmeet", "⊔": "kjoin", "∧·": "land", "∨·": "lor", "¬": "neg",
    "⊃": "weak_imp", "⇒": "strong_imp", "∗": "fusion", "⊑": "kleq", "≤·": "lleq",
    "kmeet": "kmeet", "kjoin": "kjoin", "and": "land", "or": "lor", "not": "neg",
    "imp": "weak_imp", "simp": "strong_imp", "fuse": "fusion", "kleq": "kleq", "lleq": "lleq",
}
ARITY = {"neg": 1}


class TwistAlgebra:
    """L₊ ⋈ L₋: pairs (a₊, a₋) with the componentwise bilattice connectives.

    Negation needs L₊ = L₋; weak/strong implication and fusion additionally
    need the shared lattice to be distributive (hence Heyting).
    """

    def __init__(self, plus: FiniteLattice, minus: FiniteLattice):
        self.plus = plus
        self.minus = minus
        self.carrier = tuple(product(plus.elements, minus.elements))
        self._members = frozenset(self.carrier)
        self.ff = (plus.bottom, minus.top)
        self.tt = (plus.top, minus.bottom)
        self.bot = (plus.bottom, minus.bottom)
        self.top = (plus.top, minus.top)
        self.symmetric = plus == minus
        self.implicative = self.symmetric and is_distributive(plus)

    def __repr__(self):
        return f"TwistAlgebra({self.plus.name} ⋈ {self.minus.name})"

    def _check(self, *xs):
        for x in xs:
            if x not in self._members:
                raise UnknownElement(x, repr(self))

    def kmeet(self, x, y):
        return (self.plus.meet(x[0], y[0]), self.minus.meet(x[1], y[1]))

    def kjoin(self, x, y):
        return (self.plus.join(x[0], y[0]), self.minus.join(x[1], y[1]))

    def land(self, x, y):
        return (self.plus.meet(x[0], y[0]), self.minus.join(x[1], y[1]))

    def lor(self, x, y):
        return (self.plus.join(x[0], y[0]), self.minus.meet(x[1], y[1]))

    def kleq(self, x, y) -> bool:
        return self.plus.leq(x[0], y[0]) and self.minus.leq(x[1], y[1])

    def lleq(self, x, y) -> bool:
        return self.plus.leq(x[0], y[0]) and self.minus.leq(y[1], x[1])

    def neg(self, x):
        if not self.symmetric:
            raise ConnectiveUnavailable("¬ needs L₊ = L₋")
        return (x[1], x[0])

    def weak_imp(self, x, y):
        if not self.implicative:
            raise ConnectiveUnavailable("⊃ needs a shared distributive component lattice")
        L = self.plus
        return (L.implies(x[0], y[0]), L.meet(x[0], y[1]))

    def strong_imp(self, x, y):
        return self.land(self.weak_imp(x, y), self.weak_imp(self.neg(y), self.neg(x)))

    def fusion(self, x, y):
        return self.neg(self.strong_imp(y, self.neg(x)))


def twist_construct(plus: FiniteLattice, minus: FiniteLattice | None = None) -> TwistAlgebra:
    return TwistAlgebra(plus, plus if minus is None else minus)


def bilattice_eval(T, connective: str, *args):
    try:
        method = CONNECTIVES[connective]
    except KeyError:
        raise ConnectiveUnavailable(f"unknown connective {connective!r}") from None
    arity = ARITY.get(method, 2)
    if len(args) != arity:
        raise TypeError(f"{connective} takes {arity} argument(s), got {len(args)}")
    if isinstance(T, TwistAlgebra):
        T._check(*args)
    return getattr(T, method)(*args)


def logic_order_from_info(T, x, y) -> bool:
    """x ≤· y recovered from ⊑ and the constants f, t."""
    t, f = T.tt, T.ff
    return T.kleq(T.kmeet(x, t), T.kmeet(y, t)) and T.kleq(T.kmeet(y, f), T.kmeet(x, f))


class AbstractBilattice:
    """A bilattice given by explicit operation tables.

    Tables are not validated on construction so that non-examples can be
    built; :func:`bilattice_violation` reports which axiom fails.
    """

    def __init__(self, carrier, kmeet, kjoin, land, lor, neg, ff, tt, bot, top, name="B"):
        self.name = name
        self.carrier = tuple(carrier)
        self._kmeet, self._kjoin = dict(kmeet), dict(kjoin)
        self._land, self._lor = dict(land), dict(lor)
        self._neg = dict(neg)
        self.ff, self.tt, self.bot, self.top = ff, tt, bot, top

    def __repr__(self):
        return f"AbstractBilattice({self.name!r}, {len(self.carrier)} elements)"

    def kmeet(self, x, y):
        return self._kmeet[(x, y)]

    def kjoin(self, x, y):
        return self._kjoin[(x, y)]

    def land(self, x, y):
        return self._land[(x, y)]

    def lor(self, x, y):
        return self._lor[(x, y)]

    def neg(self, x):
        return self._neg[x]

    def kleq(self, x, y) -> bool:
        return self.kmeet(x, y) == x

    def lleq(self, x, y) -> bool:
        return self.land(x, y) == x

    def with_table(self, op: str, overrides: dict) -> "AbstractBilattice":
        """Copy with some entries of one table replaced (for building non-examples)."""
        tables = {k: dict(getattr(self, "_" + k)) for k in ("kmeet", "kjoin", "land", "lor", "neg")}
        tables[op].update(overrides)
        return AbstractBilattice(self.carrier, ff=self.ff, tt=self.tt, bot=self.bot,
                                 top=self.top, name=self.name + "*", **tables)

    @classmethod
    def from_twist(cls, T: TwistAlgebra, name=None):
        c = T.carrier
        pairs = list(product(c, repeat=2))
        return cls(c,
                   kmeet={(x, y): T.kmeet(x, y) for x, y in pairs},
                   kjoin={(x, y): T.kjoin(x, y) for x, y in pairs},
                   land={(x, y): T.land(x, y) for x, y in pairs},
                   lor={(x, y): T.lor(x, y) for x, y in pairs},
                   neg={x: T.neg(x) for x in c},
                   ff=T.ff, tt=T.tt, bot=T.bot, top=T.top,
                   name=name or f"{T.plus.name}⋈{T.minus.name}")

    @classmethod
    def from_orders(cls, elements, info_pairs, logic_pairs, neg, name="B"):
        """Hand entry: give the covering pairs of ⊑ and ≤· plus the negation table."""
        K = build_lattice(elements, info_pairs, name + "/⊑")
        T = build_lattice(elements, logic_pairs, name + "/≤·")
        pairs = list(product(elements, repeat=2))
        return cls(elements,
                   kmeet={(x, y): K.meet(x, y) for x, y in pairs},
                   kjoin={(x, y): K.join(x, y) for x, y in pairs},
                   land={(x, y): T.meet(x, y) for x, y in pairs},
                   lor={(x, y): T.join(x, y) for x, y in pairs},
                   neg=dict(neg), ff=T.bottom, tt=T.top, bot=K.bottom, top=K.top, name=name)


def four() -> AbstractBilattice:
    """Belnap's FOUR entered from its two Hasse diagrams."""
    els = ["None", "False", "True", "Both"]
    info = [("None", "False"), ("None", "True"), ("False", "Both"), ("True", "Both")]
    logic = [("False", "None"), ("False", "Both"), ("None", "True"), ("Both", "True")]
    neg = {"None": "None", "Both": "Both", "True": "False", "False": "True"}
    return AbstractBilattice.from_orders(els, info, logic, neg, name="FOUR")


def _lattice_law_violation(c, meet, join, bottom, top):
    for x in c:
        if meet(x, x) != x or join(x, x) != x:
            return ("idempotence", x)
        if meet(x, bottom) != bottom or join(x, bottom) != x:
            return ("bottom", x)
        if join(x, top) != top or meet(x, top) != x:
            return ("top", x)
    for x, y in product(c, repeat=2):
        if meet(x, y) != meet(y, x) or join(x, y) != join(y, x):
            return ("commutativity", (x, y))
        if meet(x, join(x, y)) != x or join(x, meet(x, y)) != x:
            return ("absorption", (x, y))
    for x, y, z in product(c, repeat=3):
        if meet(x, meet(y, z)) != meet(meet(x, y), z) or join(x, join(y, z)) != join(join(x, y), z):
            return ("associativity", (x, y, z))
    return None


def bilattice_violation(B):
    """(axiom, witness) for the first failing bilattice axiom, or None."""
    c = B.carrier
    for op in ("kmeet", "kjoin", "land", "lor"):
        for x, y in product(c, repeat=2):
            if getattr(B, op)(x, y) not in c:
                return ("BI-1", (op, x, y))
    bad = _lattice_law_violation(c, B.kmeet, B.kjoin, B.bot, B.top)
    if bad:
        return ("BI-1", ("⊓/⊔ " + bad[0], bad[1]))
    bad = _lattice_law_violation(c, B.land, B.lor, B.ff, B.tt)
    if bad:
        return ("BI-1", ("∧·/∨· " + bad[0], bad[1]))
    for x, y in product(c, repeat=2):
        if B.kleq(x, y) and not B.kleq(B.neg(x), B.neg(y)):
            return ("BI-2", (x, y))
        if B.lleq(x, y) and not B.lleq(B.neg(y), B.neg(x)):
            return ("BI-3", (x, y))
    for x in c:
        if B.neg(B.neg(x)) != x:
            return ("BI-4", x)
    return None


def interlacing_violation(B):
    c = B.carrier
    for x, y, z in product(c, repeat=3):
        if B.lleq(x, y):
            if not B.lleq(B.kmeet(x, z), B.kmeet(y, z)):
                return ("≤· vs ⊓", (x, y, z))
            if not B.lleq(B.kjoin(x, z), B.kjoin(y, z)):
                return ("≤· vs ⊔", (x, y, z))
        if B.kleq(x, y):
            if not B.kleq(B.land(x, z), B.land(y, z)):
                return ("⊑ vs ∧·", (x, y, z))
            if not B.kleq(B.lor(x, z), B.lor(y, z)):
                return ("⊑ vs ∨·", (x, y, z))
    return None


def is_interlaced(B) -> bool:
    bad = bilattice_violation(B)
    if bad:
        raise NotABilattice(*bad)
    return interlacing_violation(B) is None


def twist_representation(B):
    """Decompose an interlaced bilattice as L⋈ with L = [⊥, t].

    Returns ``(L, phi)`` where ``phi`` maps each element x to
    (x ⊓ t, ¬(x ⊓ f)) in L × L.  The map is verified exhaustively to be a
    bijection preserving ⊓, ⊔, ∧·, ∨· and ¬.
    """
    if not is_interlaced(B):
        raise NotInterlaced(f"{B!r} is not interlaced: {interlacing_violation(B)}")
    t, f = B.tt, B.ff
    els = [x for x in B.carrier if B.kleq(B.bot, x) and B.kleq(x, t)]
    pairs = [(x, y) for x in els for y in els if x != y and B.kleq(x, y)]
    L = build_lattice(els, pairs, f"[⊥,t] of {getattr(B, 'name', 'B')}")
    phi = {x: (B.kmeet(x, t), B.neg(B.kmeet(x, f))) for x in B.carrier}

    T = TwistAlgebra(L, L)
    if len(set(phi.values())) != len(phi) or set(phi.values()) != set(T.carrier):
        raise RepresentationCheckFailed("φ is not a bijection onto L×L")
    for op in ("kmeet", "kjoin", "land", "lor"):
        for x, y in product(B.carrier, repeat=2):
            if phi[getattr(B, op)(x, y)] != getattr(T, op)(phi[x], phi[y]):
                raise RepresentationCheckFailed(f"φ does not preserve {op} at {fmt((x, y))}")
    for x in B.carrier:
        if phi[B.neg(x)] != T.neg(phi[x]):
            raise RepresentationCheckFailed(f"φ does not preserve ¬ at {fmt(x)}")
    return L, phi


def residuation_counterexample(T):
    """First (x, y, z) where x∗y ≤· z and x ≤· y⇒z disagree, or None."""
    if not getattr(T, "implicative", False):
        raise ConnectiveUnavailable("residuation needs ⊃")
    c = T.carrier
    for x, y, z in product(c, repeat=3):
        if T.lleq(T.fusion(x, y), z) != T.lleq(x, T.strong_imp(y, z)):
            return (x, y, z)
    return None


def check_residuation(T) -> bool:
    return residuation_counterexample(T) is None
