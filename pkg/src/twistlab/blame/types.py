"""Types over finite base carriers and the four subtyping relations."""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from ..errors import IllFormedType


@dataclass(frozen=True)
class Carrier:
    name: str
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise IllFormedType(f"carrier {self.name} is empty")
        if len(set(self.values)) != len(self.values):
            raise IllFormedType(f"carrier {self.name} repeats a value")


class Ty:
    __slots__ = ()


@dataclass(frozen=True)
class Dyn(Ty):
    def __str__(self):
        return "dyn"


DYN = Dyn()


@dataclass(frozen=True)
class Refine(Ty):
    carrier: Carrier
    subset: frozenset

    def __post_init__(self):
        object.__setattr__(self, "subset", frozenset(self.subset))
        stray = self.subset - set(self.carrier.values)
        if stray:
            raise IllFormedType(f"{sorted(map(str, stray))} not in carrier {self.carrier.name}")

    @property
    def is_base(self) -> bool:
        return len(self.subset) == len(self.carrier.values)

    def members(self) -> list:
        return [v for v in self.carrier.values if v in self.subset]

    def __str__(self):
        if self.is_base:
            return self.carrier.name
        return "{" + f"{self.carrier.name}: " + ",".join(map(str, self.members())) + "}"


@dataclass(frozen=True)
class Fun(Ty):
    dom: Ty
    cod: Ty

    def __post_init__(self):
        for t in (self.dom, self.cod):
            if not isinstance(t, Ty):
                raise IllFormedType(f"{t!r} is not a type")

    def __str__(self):
        return f"({self.dom} -> {self.cod})"


def base(c: Carrier) -> Refine:
    return Refine(c, frozenset(c.values))


def refine(c: Carrier, values) -> Refine:
    return Refine(c, frozenset(values))


def depth(t: Ty) -> int:
    if isinstance(t, Fun):
        return 1 + max(depth(t.dom), depth(t.cod))
    return 1


# -- subtyping -----------------------------------------------------------------

RELATIONS = ("standard", "naive", "positive", "negative")

# relation -> (relation used on the domains, whether the domains swap, relation on codomains)
FUN_RULES = {
    "standard": ("standard", True, "standard"),
    "naive": ("naive", False, "naive"),
    "positive": ("negative", True, "positive"),
    "negative": ("positive", True, "negative"),
}


def dyn_rule(rel: str, S: Ty, T: Ty):
    """Verdict when S or T is dyn, else None."""
    if isinstance(T, Dyn):
        return True
    if isinstance(S, Dyn):
        return rel == "negative"
    return None


def refine_rule(rel: str, S: Refine, T: Refine) -> bool:
    if S.carrier != T.carrier:
        return False
    if rel == "negative":
        return True
    return S.subset <= T.subset


def subtype(rel: str, S: Ty, T: Ty, rules: dict = FUN_RULES) -> bool:
    if rel not in RELATIONS:
        raise ValueError(f"unknown subtyping relation {rel!r}")
    for t in (S, T):
        if not isinstance(t, Ty):
            raise IllFormedType(f"{t!r} is not a type")
    verdict = dyn_rule(rel, S, T)
    if verdict is not None:
        return verdict
    if isinstance(S, Refine) and isinstance(T, Refine):
        return refine_rule(rel, S, T)
    if isinstance(S, Fun) and isinstance(T, Fun):
        dom_rel, swap, cod_rel = rules[rel]
        dom_ok = subtype(dom_rel, T.dom, S.dom, rules) if swap else subtype(dom_rel, S.dom, T.dom, rules)
        return dom_ok and subtype(cod_rel, S.cod, T.cod, rules)
    return False


def compatible(S: Ty, T: Ty) -> bool:
    """Whether a cast between S and T is well-formed."""
    if isinstance(S, Dyn) or isinstance(T, Dyn):
        return True
    if isinstance(S, Refine) and isinstance(T, Refine):
        return S.carrier == T.carrier
    if isinstance(S, Fun) and isinstance(T, Fun):
        return compatible(S.dom, T.dom) and compatible(S.cod, T.cod)
    return False


# -- configurations and enumeration --------------------------------------------

@dataclass(frozen=True)
class TypeConfig:
    """Carriers plus, per carrier, the refinement subsets to enumerate."""

    carriers: tuple
    predicates: tuple    # per carrier: tuple of subsets (the full carrier is always added)

    def carrier(self, name: str) -> Carrier:
        for c in self.carriers:
            if c.name == name:
                return c
        raise IllFormedType(f"unknown carrier {name!r}")

    def ground_types(self) -> list[Ty]:
        out: list[Ty] = [DYN]
        for c, preds in zip(self.carriers, self.predicates):
            seen = [base(c)]
            for p in preds:
                t = refine(c, p)
                if t not in seen:
                    seen.append(t)
            out.extend(seen)
        return out

    def types(self, max_depth: int) -> list[Ty]:
        """All types with function nesting below ``max_depth``, ground types first."""
        if max_depth < 1:
            return []
        ground = self.ground_types()
        if max_depth == 1:
            return ground
        inner = self.types(max_depth - 1)
        return ground + [Fun(a, b) for a, b in product(inner, repeat=2)]


INT4 = Carrier("int", (0, 1, 2, 3))
BOOL = Carrier("bool", ("tt", "ff"))

# the fixed five-predicate family on Int(0..3)
INT_PREDICATES = (frozenset({1, 2, 3}), frozenset({0, 2}), frozenset({0, 1}), frozenset({0}), frozenset())

DECOMPOSITION_CONFIG = TypeConfig((INT4, BOOL), (INT_PREDICATES, ()))
BOOL_ONLY_CONFIG = TypeConfig((BOOL,), ((frozenset(), frozenset({"tt"}), frozenset({"ff"})),))


# -- type expressions ----------------------------------------------------------

_TOKEN = re.compile(r"\s*(->|\(|\)|\{[^}]*\}|[A-Za-z_][A-Za-z0-9_]*)")


def _coerce(c: Carrier, raw: str):
    for v in c.values:
        if str(v) == raw:
            return v
    raise IllFormedType(f"{raw!r} is not a value of {c.name}")


def parse_type(text: str, carriers) -> Ty:
    """Parse ``int | bool | dyn | {int: v1,...} | (T -> T)``."""
    by_name = {c.name: c for c in carriers}
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise IllFormedType(f"unexpected input at {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def atom(tok):
        if tok == "dyn":
            return DYN
        if tok in by_name:
            return base(by_name[tok])
        if tok.startswith("{"):
            body = tok[1:-1]
            name, _, vals = body.partition(":")
            c = by_name.get(name.strip())
            if c is None:
                raise IllFormedType(f"unknown carrier {name.strip()!r}")
            raw = [v.strip() for v in vals.split(",") if v.strip()]
            return refine(c, [_coerce(c, v) for v in raw])
        raise IllFormedType(f"unknown type {tok!r}")

    def parse(i):
        if i >= len(tokens):
            raise IllFormedType("unexpected end of type")
        tok = tokens[i]
        if tok == "(":
            dom, i = parse(i + 1)
            if i >= len(tokens) or tokens[i] != "->":
                raise IllFormedType("expected '->'")
            cod, i = parse(i + 1)
            if i >= len(tokens) or tokens[i] != ")":
                raise IllFormedType("expected ')'")
            return Fun(dom, cod), i + 1
        if tok in (")", "->"):
            raise IllFormedType(f"unexpected {tok!r}")
        return atom(tok), i + 1

    ty, end = parse(0)
    if end != len(tokens):
        raise IllFormedType(f"trailing input after type: {' '.join(tokens[end:])}")
    return ty
