"""Isomorphism search between finite relational structures.

Lattices, bilattices, twist algebras and d-frames are all flattened into a
:class:`RelStructure` (one carrier plus named relations, with operations
encoded as their graphs) and compared by a backtracking search.  Candidates
are pruned by colour refinement seeded with per-element invariants: relation
participation counts and, when an order is present, Hasse degree and height.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Mapping


@dataclass(frozen=True)
class RelStructure:
    elements: tuple
    relations: Mapping[str, frozenset]

    def arity(self, name):
        rel = self.relations[name]
        return len(next(iter(rel))) if rel else 0


def _graph(elements, op):
    return frozenset((a, b, op(a, b)) for a in elements for b in elements)


def _unary_graph(elements, op):
    return frozenset((a, op(a)) for a in elements)


def _order(elements, leq):
    return frozenset((a, b) for a in elements for b in elements if leq(a, b))


# Signature aliases accepted by find_isomorphism.
ALIASES = {
    "⊓": "kmeet", "⊔": "kjoin", "∧·": "land", "∨·": "lor", "¬": "neg",
    "⊑": "kleq", "≤·": "lleq", "∧": "meet", "∨": "join", "≤": "leq", "→": "implies",
}


def as_structure(obj, signature=None) -> RelStructure:
    """Flatten a supported object into a RelStructure restricted to ``signature``."""
    from .bilattice import AbstractBilattice, TwistAlgebra
    from .dframe import DFrame, NdFrame
    from .lattice import FiniteLattice

    if isinstance(obj, RelStructure):
        rels = dict(obj.relations)
        els = obj.elements
    elif isinstance(obj, FiniteLattice):
        els = obj.elements
        rels = {
            "leq": lambda: _order(els, obj.leq),
            "meet": lambda: _graph(els, obj.meet),
            "join": lambda: _graph(els, obj.join),
            "implies": lambda: _graph(els, obj.implies),
            "bottom": lambda: frozenset({(obj.bottom,)}),
            "top": lambda: frozenset({(obj.top,)}),
        }
        signature = signature or ("leq",)
    elif isinstance(obj, (TwistAlgebra, AbstractBilattice)):
        els = tuple(obj.carrier)
        rels = {
            "kmeet": lambda: _graph(els, obj.kmeet),
            "kjoin": lambda: _graph(els, obj.kjoin),
            "land": lambda: _graph(els, obj.land),
            "lor": lambda: _graph(els, obj.lor),
            "neg": lambda: _unary_graph(els, obj.neg),
            "kleq": lambda: _order(els, obj.kleq),
            "lleq": lambda: _order(els, obj.lleq),
            "ff": lambda: frozenset({(obj.ff,)}),
            "tt": lambda: frozenset({(obj.tt,)}),
            "bot": lambda: frozenset({(obj.bot,)}),
            "top": lambda: frozenset({(obj.top,)}),
        }
        signature = signature or ("kmeet", "kjoin", "land", "lor", "neg")
    elif isinstance(obj, (DFrame, NdFrame)):
        D = obj.base if isinstance(obj, NdFrame) else obj
        plus = tuple(("+", a) for a in D.plus.elements)
        minus = tuple(("-", b) for b in D.minus.elements)
        els = plus + minus
        rels = {
            "plus": lambda: frozenset((x,) for x in plus),
            "minus": lambda: frozenset((x,) for x in minus),
            "leq_plus": lambda: frozenset((("+", a), ("+", b)) for a, b in D.plus.order_pairs()),
            "leq_minus": lambda: frozenset((("-", a), ("-", b)) for a, b in D.minus.order_pairs()),
            "con": lambda: frozenset((("+", a), ("-", b)) for a, b in D.con),
            "tot": lambda: frozenset((("+", a), ("-", b)) for a, b in D.tot),
        }
        if isinstance(obj, NdFrame):
            rels["p"] = lambda: frozenset((("-", b), ("+", obj.p(b))) for b in D.minus.elements)
            rels["m"] = lambda: frozenset((("+", a), ("-", obj.m(a))) for a in D.plus.elements)
        signature = signature or tuple(rels)
    else:
        raise TypeError(f"cannot compare objects of type {type(obj).__name__}")

    chosen = {}
    for raw in (signature or tuple(rels)):
        name = ALIASES.get(raw, raw)
        if name not in rels:
            raise ValueError(f"signature entry {raw!r} not available for {type(obj).__name__}")
        value = rels[name]
        chosen[name] = value() if callable(value) else frozenset(value)
    return RelStructure(tuple(els), chosen)


def _initial_colours(s: RelStructure):
    col = {}
    counts = {x: Counter() for x in s.elements}
    for name, rel in s.relations.items():
        for t in rel:
            for pos, x in enumerate(t):
                counts[x][(name, pos)] += 1
            if len(set(t)) < len(t):
                # record coincidence pattern, e.g. idempotence or reflexivity
                pattern = tuple(t.index(x) for x in t)
                counts[t[0]][(name, "eq", pattern)] += 1
    # order-theoretic invariants: Hasse degree and height
    for name, rel in s.relations.items():
        if not rel or len(next(iter(rel))) != 2 or name not in ("leq", "kleq", "lleq", "leq_plus", "leq_minus"):
            continue
        strict = {(a, b) for a, b in rel if a != b}
        nodes = {x for t in strict for x in t}
        cover = {(a, b) for a, b in strict
                 if not any((a, c) in strict and (c, b) in strict for c in nodes)}
        height = {}

        def h(x):
            if x not in height:
                height[x] = max((h(a) + 1 for a, b in cover if b == x), default=0)
            return height[x]

        for x in s.elements:
            up = sum(1 for a, _ in cover if a == x)
            down = sum(1 for _, b in cover if b == x)
            counts[x][(name, "hasse")] = (up, down)
            counts[x][(name, "height")] = h(x) if x in nodes else -1
    for x in s.elements:
        col[x] = tuple(sorted((repr(k), repr(v)) for k, v in counts[x].items()))
    return col


def _refine(s: RelStructure, colours, rounds=3):
    incident = defaultdict(list)
    for name, rel in s.relations.items():
        for t in rel:
            for pos, x in enumerate(t):
                incident[x].append((name, pos, t))
    for _ in range(rounds):
        new = {}
        for x in s.elements:
            sig = sorted((name, pos, tuple(colours[y] for y in t)) for name, pos, t in incident[x])
            new[x] = hash((colours[x], tuple(sig)))
        colours = new
    return colours


def find_isomorphism(A, B, signature=None):
    """Return a bijection A → B (as a dict) commuting with the signature, or None."""
    sa = as_structure(A, signature)
    sb = as_structure(B, signature)
    if len(sa.elements) != len(sb.elements):
        return None
    if set(sa.relations) != set(sb.relations):
        return None
    for name in sa.relations:
        if len(sa.relations[name]) != len(sb.relations[name]):
            return None
        if sa.relations[name] and sa.arity(name) != sb.arity(name):
            return None

    # refine both structures jointly so colours are comparable
    ca0, cb0 = _initial_colours(sa), _initial_colours(sb)
    ca, cb = _refine(sa, ca0), _refine(sb, cb0)
    if Counter(ca.values()) != Counter(cb.values()):
        return None

    by_colour = defaultdict(list)
    for y in sb.elements:
        by_colour[cb[y]].append(y)

    order = sorted(sa.elements, key=lambda x: (len(by_colour[ca[x]]), sa.elements.index(x)))
    position = {x: i for i, x in enumerate(order)}
    # each tuple is checked once all its members are assigned
    pending = defaultdict(list)
    for name, rel in sa.relations.items():
        for t in rel:
            pending[max(position[x] for x in t)].append((name, t))

    mapping, used = {}, set()

    def extend(i):
        if i == len(order):
            return True
        x = order[i]
        for y in by_colour[ca[x]]:
            if y in used:
                continue
            mapping[x] = y
            used.add(y)
            if all(tuple(mapping[z] for z in t) in sb.relations[name] for name, t in pending[i]):
                if extend(i + 1):
                    return True
            used.discard(y)
            del mapping[x]
        return False

    if extend(0):
        return {x: mapping[x] for x in sa.elements}
    return None
