"""Line-based structure files.

A file is a sequence of blocks.  Each block starts with a header line and owns
the indented-or-not body lines that follow until the next header::

    lattice C3
    elements 0 h 1
    le 0 h
    le h 1

    dframe D C3 C3
    con 0 1
    tot 1 0
    p 0 0
    m 1 1

    map inc 2 C3
    to 0 0
    to 1 1

    carrier int 0 1 2 3
    term t1 (cast {int: 0,1} int p (val 2))

    lattice free 3 5
    thread: put 3
    thread: put 5; get 3,5

``#`` starts a comment line.  Terms may span several lines while their
parentheses are open.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError, UnresolvedReference

HEADERS = ("lattice", "dframe", "map", "schedule", "carrier", "term")
BODY = {
    "lattice": ("elements", "le", "thread:"),
    "dframe": ("con", "tot", "p", "m"),
    "map": ("to",),
    "schedule": ("thread:",),
    "carrier": (),
    "term": (),
}


@dataclass(frozen=True)
class Line:
    keyword: str
    args: tuple
    lineno: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Block:
    kind: str
    name: str
    args: tuple
    body: tuple
    lineno: int = field(default=0, compare=False)

    def lines(self, keyword: str) -> list[Line]:
        return [ln for ln in self.body if ln.keyword == keyword]


@dataclass(frozen=True)
class StructureFile:
    blocks: tuple

    def get(self, name: str, kind: str | None = None) -> Block:
        for b in self.blocks:
            if b.name == name and (kind is None or b.kind == kind):
                return b
        raise UnresolvedReference(f"no {kind or 'block'} named {name!r}")

    def of_kind(self, kind: str) -> list[Block]:
        return [b for b in self.blocks if b.kind == kind]


def _balance(text: str) -> int:
    return text.count("(") - text.count(")")


def parse_structure_file(text: str) -> StructureFile:
    blocks: list[Block] = []
    header = None     # (kind, name, args, lineno)
    body: list[Line] = []

    def close():
        if header is not None:
            blocks.append(Block(header[0], header[1], header[2], tuple(body), header[3]))

    lines = text.splitlines()
    i = 0
    while i < len(lines):
        lineno, raw = i + 1, lines[i].strip()
        i += 1
        if not raw or raw.startswith("#"):
            continue
        words = raw.split()
        head = words[0]
        if head in HEADERS:
            close()
            body = []
            if len(words) < 2:
                raise ParseError(lineno, f"{head} needs a name")
            if head == "term":
                rest = raw[len("term"):].strip()
                name, _, expr = rest.partition(" ")
                expr = expr.strip()
                while _balance(expr) > 0 and i < len(lines):
                    expr += " " + lines[i].strip()
                    i += 1
                if not expr:
                    raise ParseError(lineno, "term needs an expression")
                if _balance(expr) != 0:
                    raise ParseError(lineno, "unbalanced parentheses in term")
                header = ("term", name, (" ".join(expr.split()),), lineno)
            else:
                header = (head, words[1], tuple(words[2:]), lineno)
            continue
        if header is None:
            raise ParseError(lineno, f"{head!r} outside any block")
        kind = header[0]
        if head.startswith("thread"):
            if kind not in ("schedule", "lattice"):
                raise ParseError(lineno, "thread lines belong to a schedule")
            if not head.endswith(":"):
                raise ParseError(lineno, "expected 'thread:'")
            ops = raw[len(head):].strip()
            body.append(Line("thread:", (" ".join(ops.split()),), lineno))
            continue
        if head not in BODY[kind]:
            raise ParseError(lineno, f"unexpected {head!r} in {kind} block")
        arity = {"elements": None, "le": 2, "con": 2, "tot": 2, "p": 2, "m": 2, "to": 2}[head]
        if arity is not None and len(words) - 1 != arity:
            raise ParseError(lineno, f"{head} takes {arity} arguments")
        if head == "elements" and len(words) == 1:
            raise ParseError(lineno, "elements needs at least one identifier")
        body.append(Line(head, tuple(words[1:]), lineno))
    close()

    names = {}
    for b in blocks:
        if b.name in names:
            raise ParseError(b.lineno, f"duplicate block name {b.name!r}")
        names[b.name] = b
    _check_block_shapes(blocks)
    sf = StructureFile(tuple(blocks))
    _check_references(sf)
    return sf


def _check_block_shapes(blocks):
    for b in blocks:
        if b.kind == "lattice":
            if b.name == "free":
                if not b.args:
                    raise ParseError(b.lineno, "lattice free needs values")
                if b.lines("elements") or b.lines("le"):
                    raise ParseError(b.lineno, "a free lattice takes no elements/le lines")
            elif len(b.lines("elements")) != 1:
                raise ParseError(b.lineno, f"lattice {b.name} needs exactly one elements line")
            elif b.lines("thread:"):
                raise ParseError(b.lineno, "thread lines need 'lattice free' or a schedule block")
        elif b.kind == "dframe" and len(b.args) != 2:
            raise ParseError(b.lineno, "dframe takes <name> <plus> <minus>")
        elif b.kind == "map" and len(b.args) != 2:
            raise ParseError(b.lineno, "map takes <name> <source> <target>")
        elif b.kind == "schedule" and len(b.args) != 1:
            raise ParseError(b.lineno, "schedule takes <name> <lattice>")
        elif b.kind == "carrier" and not b.args:
            raise ParseError(b.lineno, "carrier needs values")


def _check_references(sf: StructureFile):
    lattices = {b.name for b in sf.of_kind("lattice")}
    for b in sf.blocks:
        refs = []
        if b.kind in ("dframe", "map"):
            refs = list(b.args)
        elif b.kind == "schedule":
            refs = [b.args[0]]
        for ref in refs:
            if ref not in lattices:
                raise UnresolvedReference(f"line {b.lineno}: {b.kind} {b.name} refers to "
                                          f"unknown lattice {ref!r}")


def render_structure_file(sf: StructureFile) -> str:
    out = []
    for b in sf.blocks:
        if b.kind == "term":
            out.append(f"term {b.name} {b.args[0]}")
        else:
            out.append(" ".join((b.kind, b.name) + b.args))
        for ln in b.body:
            out.append(" ".join((ln.keyword,) + ln.args))
        out.append("")
    return "\n".join(out)


def read_structure_file(path) -> StructureFile:
    return parse_structure_file(Path(path).read_text(encoding="utf-8"))


# -- turning blocks into objects -----------------------------------------------

@dataclass
class Loaded:
    lattices: dict
    dframes: dict
    maps: dict
    schedules: dict
    carriers: tuple
    terms: dict


def _parse_ops(text: str, lineno: int):
    from .lvars import Get, Put

    ops = []
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        verb, _, rest = chunk.partition(" ")
        if verb == "put" and rest.strip():
            ops.append(Put(rest.strip()))
        elif verb == "get" and rest.strip():
            ops.append(Get(tuple(t.strip() for t in rest.split(",") if t.strip())))
        else:
            raise ParseError(lineno, f"bad operation {chunk!r}")
    return ops


def load(sf: StructureFile) -> Loaded:
    from .blame.types import Carrier
    from .dframe import DFrame, NdFrame
    from .lattice import LatticeMap, build_lattice
    from .lvars import Schedule, freely_add_order

    lattices, dframes, maps, schedules, terms = {}, {}, {}, {}, {}
    carriers = []
    free = None
    for b in sf.of_kind("lattice"):
        if b.name == "free":
            free = freely_add_order(b.args)
            threads = [_parse_ops(ln.args[0], ln.lineno) for ln in b.lines("thread:")]
            if threads:
                schedules["schedule"] = Schedule(free, threads, "schedule")
            continue
        elements = b.lines("elements")[0].args
        pairs = [ln.args for ln in b.lines("le")]
        lattices[b.name] = build_lattice(elements, pairs, b.name)
    for b in sf.of_kind("map"):
        src, tgt = lattices[b.args[0]], lattices[b.args[1]]
        maps[b.name] = LatticeMap(src, tgt, {ln.args[0]: ln.args[1] for ln in b.lines("to")})
    for b in sf.of_kind("dframe"):
        plus, minus = lattices[b.args[0]], lattices[b.args[1]]
        D = DFrame(plus, minus, {ln.args for ln in b.lines("con")},
                   {ln.args for ln in b.lines("tot")}, b.name)
        p, m = b.lines("p"), b.lines("m")
        if p or m:
            pm = LatticeMap(minus, plus, {ln.args[0]: ln.args[1] for ln in p})
            mm = LatticeMap(plus, minus, {ln.args[0]: ln.args[1] for ln in m})
            dframes[b.name] = NdFrame(D, pm, mm, b.name)
        else:
            dframes[b.name] = D
    for b in sf.of_kind("schedule"):
        from .lvars import JoinSemilattice

        S = JoinSemilattice.from_lattice(lattices[b.args[0]])
        threads = [_parse_ops(ln.args[0], ln.lineno) for ln in b.lines("thread:")]
        schedules[b.name] = Schedule(S, threads, b.name)
    for b in sf.of_kind("carrier"):
        carriers.append(Carrier(b.name, tuple(_literal(v) for v in b.args)))
    for b in sf.of_kind("term"):
        terms[b.name] = b.args[0]
    return Loaded(lattices, dframes, maps, schedules, tuple(carriers), terms)


def _literal(raw: str):
    try:
        return int(raw)
    except ValueError:
        return raw


# -- writing objects back out --------------------------------------------------

def dump_lattice(L, name: str | None = None) -> str:
    """A lattice block listing the covering pairs."""
    lines = [f"lattice {name or L.name}", "elements " + " ".join(map(str, L.elements))]
    lines += [f"le {a} {b}" for a, b in L.covers]
    return "\n".join(lines) + "\n"


def dump_dframe(D, name: str | None = None) -> str:
    """A dframe block (with p and m lines for nd-frames) after its lattice blocks."""
    name = name or D.name
    plus, minus = D.plus, D.minus
    parts = [dump_lattice(plus, f"{name}+")]
    if minus != plus:
        parts.append(dump_lattice(minus, f"{name}-"))
    lines = [f"dframe {name} {name}+ {name}{'+' if minus == plus else '-'}"]
    lines += [f"con {a} {b}" for a, b in D.pairs() if (a, b) in D.con]
    lines += [f"tot {a} {b}" for a, b in D.pairs() if (a, b) in D.tot]
    if hasattr(D, "p"):
        lines += [f"p {b} {D.p(b)}" for b in minus.elements]
        lines += [f"m {a} {D.m(a)}" for a in plus.elements]
    parts.append("\n".join(lines) + "\n")
    return "\n".join(parts)
