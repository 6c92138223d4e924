"""Cast terms over finite types and a big-step evaluator that allocates blame."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Union

from ..errors import IllFormedTerm, IllFormedType
from .types import DYN, Carrier, Dyn, Fun, Refine, Ty, base, compatible

# -- labels and outcomes -------------------------------------------------------


@dataclass(frozen=True)
class BlameLabel:
    name: str
    positive: bool = True

    def negate(self) -> "BlameLabel":
        return BlameLabel(self.name, not self.positive)

    @property
    def polarity(self) -> str:
        return "positive" if self.positive else "negative"

    def __str__(self):
        return self.name if self.positive else "~" + self.name


@dataclass(frozen=True)
class Result:
    value: object

    def __str__(self):
        return f"result {show_value(self.value)}"


@dataclass(frozen=True)
class Blame:
    label: BlameLabel

    def __str__(self):
        return f"blame {self.label.name} ({self.label.polarity})"


Outcome = Union[Result, Blame]


class BlameRaised(Exception):
    def __init__(self, label: BlameLabel):
        super().__init__(str(label))
        self.label = label


# -- runtime values ------------------------------------------------------------


@dataclass(frozen=True)
class Tagged:
    """A value injected into dyn; ``tag`` is a carrier name or "fun"."""

    tag: str
    payload: object


class FunValue:
    ty: Fun

    def apply(self, arg):
        raise NotImplementedError


FUN_TAG = "fun"
DYN_FUN = Fun(DYN, DYN)


def value_key(arg, ty: Ty, env: "Universe"):
    """Hashable key identifying ``arg`` as an element of ``ty``'s finite value set."""
    if isinstance(ty, Refine):
        return arg
    if isinstance(ty, Dyn):
        if not isinstance(arg, Tagged):
            raise IllFormedTerm(f"{arg!r} is not a dyn value")
        return (FUN_TAG,) if arg.tag == FUN_TAG else (arg.tag, arg.payload)
    # functions are identified by their graph on the domain
    return tuple(value_key(arg.apply(x), ty.cod, env) for x in env.values(ty.dom))


class Table(FunValue):
    def __init__(self, ty: Fun, rows: dict, env: "Universe"):
        self.ty, self.rows, self.env = ty, rows, env

    def apply(self, arg):
        key = value_key(arg, self.ty.dom, self.env)
        if key not in self.rows:
            raise IllFormedTerm(f"argument {show_value(arg)} outside the table's domain")
        row = self.rows[key]
        if isinstance(row, Term):
            return self.env.eval(row)
        return row

    def __repr__(self):
        return f"Table{self.ty}"


class Wrapped(FunValue):
    """⟨T ⇐ S⟩ᵖ f for function types S, T."""

    def __init__(self, source: Fun, target: Fun, label: BlameLabel, inner: FunValue, env: "Universe"):
        self.ty, self.source, self.label, self.inner, self.env = target, source, label, inner, env

    def apply(self, arg):
        cast = self.env.cast
        a = cast(arg, self.ty.dom, self.source.dom, self.label.negate())
        return cast(self.inner.apply(a), self.source.cod, self.ty.cod, self.label)

    def __repr__(self):
        return f"Wrapped{self.source}=>{self.ty}@{self.label}"


def show_value(v) -> str:
    if isinstance(v, Tagged):
        return f"<{v.tag}>" if v.tag == FUN_TAG else f"<{v.tag}:{v.payload}>"
    if isinstance(v, FunValue):
        return f"<fun {v.ty}>"
    return str(v)


# -- terms -------------------------------------------------------------------------


class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Value(Term):
    value: object
    ty: Ty | None = None


@dataclass(frozen=True)
class FunTable(Term):
    ty: Fun
    rows: tuple          # (key, Term) pairs; keys as produced by value_key

    @property
    def domain(self) -> Ty:
        return self.ty.dom


@dataclass(frozen=True)
class App(Term):
    fun: Term
    arg: Term


@dataclass(frozen=True)
class Cast(Term):
    target: Ty
    source: Ty
    label: BlameLabel
    body: Term


# -- the universe of values and the evaluator ----------------------------------


@dataclass
class Universe:
    """Carriers in scope plus value enumeration, casting and evaluation."""

    carriers: tuple
    _cache: dict = field(default_factory=dict, repr=False)

    def carrier_of(self, v) -> Carrier:
        hits = [c for c in self.carriers if v in c.values]
        if len(hits) != 1:
            raise IllFormedTerm(f"cannot infer the carrier of {v!r}")
        return hits[0]

    def probe(self) -> Table:
        """The function stored under the "fun" tag in dyn's value set."""
        if "probe" not in self._cache:
            first = self.carriers[0]
            rows = {(c.name, v): Tagged(c.name, v) for c in self.carriers for v in c.values}
            rows[(FUN_TAG,)] = Tagged(first.name, first.values[0])
            self._cache["probe"] = Table(DYN_FUN, rows, self)
        return self._cache["probe"]

    def values(self, ty: Ty) -> list:
        key = ("values", ty)
        if key in self._cache:
            return self._cache[key]
        if isinstance(ty, Refine):
            out = ty.members()
        elif isinstance(ty, Dyn):
            out = [Tagged(c.name, v) for c in self.carriers for v in c.values]
            out.append(Tagged(FUN_TAG, self.probe()))
        else:
            dom = self.values(ty.dom)
            cod = self.values(ty.cod)
            keys = [value_key(x, ty.dom, self) for x in dom]
            out = [Table(ty, dict(zip(keys, outs)), self) for outs in product(cod, repeat=len(dom))]
        self._cache[key] = out
        return out

    def cast(self, v, source: Ty, target: Ty, label: BlameLabel):
        if isinstance(source, Dyn) and isinstance(target, Dyn):
            return v
        if isinstance(target, Dyn):
            if isinstance(source, Refine):
                return Tagged(source.carrier.name, v)
            if source == DYN_FUN:
                return Tagged(FUN_TAG, v)
            return Tagged(FUN_TAG, Wrapped(source, DYN_FUN, label, v, self))
        if isinstance(source, Dyn):
            if not isinstance(v, Tagged):
                raise IllFormedTerm(f"{show_value(v)} is not a dyn value")
            if isinstance(target, Refine):
                if v.tag != target.carrier.name:
                    raise BlameRaised(label)
                return self.cast(v.payload, base(target.carrier), target, label)
            if v.tag != FUN_TAG:
                raise BlameRaised(label)
            return self.cast(v.payload, DYN_FUN, target, label)
        if isinstance(source, Refine) and isinstance(target, Refine):
            if source.carrier != target.carrier:
                raise IllFormedTerm(f"cast between {source} and {target}")
            if v not in target.subset:
                raise BlameRaised(label)
            return v
        if isinstance(source, Fun) and isinstance(target, Fun):
            if not compatible(source, target):
                raise IllFormedTerm(f"cast between {source} and {target}")
            return Wrapped(source, target, label, v, self)
        raise IllFormedTerm(f"cast between {source} and {target}")

    # -- terms

    def type_of(self, t: Term) -> Ty:
        if isinstance(t, Value):
            if t.ty is not None:
                return t.ty
            return base(self.carrier_of(t.value))
        if isinstance(t, FunTable):
            return t.ty
        if isinstance(t, App):
            f = self.type_of(t.fun)
            if not isinstance(f, Fun):
                raise IllFormedTerm(f"applying a non-function of type {f}")
            self._expect(t.arg, f.dom)
            return f.cod
        if isinstance(t, Cast):
            if not compatible(t.source, t.target):
                raise IllFormedTerm(f"incompatible cast {t.source} => {t.target}")
            self._expect(t.body, t.source)
            return t.target
        raise IllFormedTerm(f"unknown term {t!r}")

    def _expect(self, t: Term, ty: Ty):
        actual = self.type_of(t)
        if actual == ty:
            return
        # a bare base value also inhabits any refinement containing it
        if (isinstance(t, Value) and t.ty is None and isinstance(ty, Refine)
                and t.value in ty.subset):
            return
        raise IllFormedTerm(f"expected {ty}, found {actual}")

    def check(self, t: Term):
        self.type_of(t)
        for sub in _subterms(t):
            if isinstance(sub, FunTable):
                expected = {value_key(x, sub.ty.dom, self) for x in self.values(sub.ty.dom)}
                keys = [k for k, _ in sub.rows]
                if set(keys) != expected or len(keys) != len(expected):
                    raise IllFormedTerm(f"function table over {sub.ty.dom} is not exhaustive")
                for _, row in sub.rows:
                    self._expect(row, sub.ty.cod)

    def eval(self, t: Term):
        if isinstance(t, Value):
            return t.value
        if isinstance(t, FunTable):
            return Table(t.ty, dict(t.rows), self)
        if isinstance(t, App):
            f = self.eval(t.fun)
            if not isinstance(f, FunValue):
                raise IllFormedTerm("applying a non-function")
            return f.apply(self.eval(t.arg))
        if isinstance(t, Cast):
            return self.cast(self.eval(t.body), t.source, t.target, t.label)
        raise IllFormedTerm(f"unknown term {t!r}")


def _subterms(t: Term):
    yield t
    if isinstance(t, FunTable):
        for _, row in t.rows:
            yield from _subterms(row)
    elif isinstance(t, App):
        yield from _subterms(t.fun)
        yield from _subterms(t.arg)
    elif isinstance(t, Cast):
        yield from _subterms(t.body)


def eval_cast(t: Term, universe: Universe) -> Outcome:
    universe.check(t)
    try:
        return Result(universe.eval(t))
    except BlameRaised as exc:
        return Blame(exc.label)


# -- s-expression syntax for terms ---------------------------------------------


def _sexpr_tokens(text: str) -> list[str]:
    out, i = [], 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            out.append(ch)
            i += 1
        elif ch == "{":
            j = text.index("}", i)
            out.append(text[i:j + 1])
            i = j + 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "(){":
                j += 1
            out.append(text[i:j])
            i = j
    return out


def _read(tokens, i):
    if tokens[i] == "(":
        items, i = [], i + 1
        while i < len(tokens) and tokens[i] != ")":
            item, i = _read(tokens, i)
            items.append(item)
        if i >= len(tokens):
            raise IllFormedTerm("unbalanced parentheses")
        return items, i + 1
    if tokens[i] == ")":
        raise IllFormedTerm("unexpected ')'")
    return tokens[i], i + 1


def _type_text(x) -> str:
    if isinstance(x, list):
        return "(" + " ".join(_type_text(y) for y in x) + ")"
    return x


def _atom_value(raw: str, universe: Universe, ty: Ty | None = None):
    carriers = [ty.carrier] if isinstance(ty, Refine) else universe.carriers
    hits = [v for c in carriers for v in c.values if str(v) == raw]
    if len(hits) != 1:
        raise IllFormedTerm(f"cannot read value {raw!r}")
    return hits[0]


def parse_term(text: str, universe: Universe) -> Term:
    """Read ``(val v) | (fun T T (k term)...) | (app t t) | (cast T S label t)``."""
    from .types import parse_type

    tokens = _sexpr_tokens(text)
    if not tokens:
        raise IllFormedTerm("empty term")
    tree, end = _read(tokens, 0)
    if end != len(tokens):
        raise IllFormedTerm("trailing input after term")

    def ty(x) -> Ty:
        try:
            return parse_type(_type_text(x), universe.carriers)
        except IllFormedType as exc:
            raise IllFormedTerm(str(exc)) from None

    def build(x) -> Term:
        if not isinstance(x, list) or not x:
            raise IllFormedTerm(f"expected a term, found {x!r}")
        head = x[0]
        if head == "val" and len(x) == 2:
            return Value(_atom_value(x[1], universe))
        if head == "app" and len(x) == 3:
            return App(build(x[1]), build(x[2]))
        if head == "cast" and len(x) == 5:
            label = x[3]
            lab = BlameLabel(label[1:], False) if label.startswith("~") else BlameLabel(label)
            return Cast(ty(x[1]), ty(x[2]), lab, build(x[4]))
        if head == "fun" and len(x) >= 3:
            fty = Fun(ty(x[1]), ty(x[2]))
            rows = []
            for row in x[3:]:
                if not isinstance(row, list) or len(row) != 2:
                    raise IllFormedTerm("function rows look like (key term)")
                rows.append((_row_key(row[0], fty.dom, universe), build(row[1])))
            return FunTable(fty, tuple(rows))
        raise IllFormedTerm(f"malformed term starting with {head!r}")

    return build(tree)


def _row_key(raw, dom: Ty, universe: Universe):
    if isinstance(dom, Refine):
        return _atom_value(raw, universe, dom)
    if isinstance(dom, Dyn):
        if raw == FUN_TAG:
            return (FUN_TAG,)
        v = _atom_value(raw, universe)
        return (universe.carrier_of(v).name, v)
    raise IllFormedTerm("function-typed table domains are not supported in term files")


def render_term(t: Term) -> str:
    if isinstance(t, Value):
        return f"(val {t.value})"
    if isinstance(t, App):
        return f"(app {render_term(t.fun)} {render_term(t.arg)})"
    if isinstance(t, Cast):
        return f"(cast {t.target} {t.source} {t.label} {render_term(t.body)})"
    if isinstance(t, FunTable):
        rows = " ".join(f"({_render_key(k)} {render_term(r)})" for k, r in t.rows)
        return f"(fun {t.ty.dom} {t.ty.cod} {rows})"
    raise IllFormedTerm(f"unknown term {t!r}")


def _render_key(k) -> str:
    if isinstance(k, tuple):
        return FUN_TAG if k == (FUN_TAG,) else str(k[1])
    return str(k)
