"""Command-line front end: ``twistlab <module> <command> ...``."""
from __future__ import annotations

import argparse
import sys
from itertools import product
from pathlib import Path

from .bilattice import (AbstractBilattice, _lattice_law_violation, twist_construct,
                        twist_representation)
from .blame import (BOOL, INT4, Universe, blame_safety_suite, check_decomposition, eval_cast,
                    parse_term, parse_type, subtype)
from .chu import (ALIASES, BINARY, UNARY, ChuModel, chu_table, closure_violation,
                  verify_chu_identities, verify_term_definability)
from .dframe import NdFrame, check_dframe, check_ndframe
from .errors import ParseError, TwistlabError, UnresolvedReference, UsageError
from .formulas import axiom_suite
from .iso import find_isomorphism
from .lattice import fmt, is_distributive, way_below
from .lvars import determinism_check, interleavings, round_robin, show_trace, simulate
from .partial import partial_roundtrip, prec_suite
from .report import Report
from .structfile import load, read_structure_file

REL_NAMES = {"<:": "standard", "<:+": "positive", "<:-": "negative", "<:n": "naive",
             "standard": "standard", "positive": "positive", "negative": "negative",
             "naive": "naive"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Output:
    def __init__(self, machine: bool):
        self.machine = machine
        self.lines: list[str] = []
        self.reports: list[Report] = []

    def write(self, text: str = ""):
        self.lines.append(text)

    def report(self, r: Report):
        self.reports.append(r)
        self.lines.append(r.render_machine() if self.machine else r.render())

    @property
    def status(self) -> int:
        return 0 if all(r.passed for r in self.reports) else 1

    def text(self) -> str:
        return "\n".join(self.lines) + ("\n" if self.lines else "")


def _resolve(path: str, fixtures: str | None) -> Path:
    candidates = [Path(path)]
    if fixtures:
        candidates += [Path(fixtures) / path, Path(fixtures) / Path(path).name]
    for c in candidates:
        if c.is_file():
            return c
    raise UsageError(f"no such file: {path}")


def _load(args):
    path = _resolve(args.file, args.fixtures)
    try:
        sf = read_structure_file(path)
    except ParseError as exc:
        raise UsageError(f"{path}:{exc.line}: {exc.message}") from None
    except UnresolvedReference as exc:
        raise UsageError(f"{path}: {exc}") from None
    return load(sf)


def _pick(table: dict, name: str | None, what: str):
    if name is not None:
        if name not in table:
            raise UsageError(f"no {what} named {name!r}")
        return {name: table[name]}
    if not table:
        raise UsageError(f"the file defines no {what}")
    return table


def _grid(rows: list[str], header: list[str], cells: list[list[str]]) -> list[str]:
    width = max(len(x) for x in rows + header + [c for row in cells for c in row])
    out = [" " * width + " | " + " ".join(h.rjust(width) for h in header)]
    out.append("-" * len(out[0]))
    for r, row in zip(rows, cells):
        out.append(r.rjust(width) + " | " + " ".join(c.rjust(width) for c in row))
    return out


# -- lattices and bilattices ---------------------------------------------------

def cmd_lattice_check(args, out: Output):
    for name, L in _pick(_load(args).lattices, args.name, "lattice").items():
        r = Report(f"lattice {name}")
        bad = _lattice_law_violation(L.elements, L.meet, L.join, L.bottom, L.top)
        r.add(f"lattice laws ({len(L)} elements)", bad is None, f"{bad[0]} at {fmt(bad[1])}" if bad else "")
        bad = next(((k, l) for k, l in product(L.elements, repeat=2)
                    if way_below(L, k, l) != L.leq(k, l)), None)
        r.add("k ≪ l ⇔ k ≤ l", bad is None, fmt(bad) if bad else "")
        w = L.distributivity_witness
        witness = "" if w is None else f"a∧(b∨c) ≠ (a∧b)∨(a∧c) at (a,b,c) = {fmt(w)}"
        r.add("distributive", w is None, witness or "yes", info=not args.distributive)
        lonely = None
        if w is None:
            lonely = next((x for x in L.elements if not L.complements(x)), None)
        boolean = w is None and lonely is None
        witness = "yes" if boolean else ("not distributive" if w else f"{fmt(lonely)} has no complement")
        r.add("Boolean", boolean, witness, info=not args.boolean)
        out.report(r)


def _twist_ops(T):
    ops = [("⊓", T.kmeet), ("⊔", T.kjoin), ("∧·", T.land), ("∨·", T.lor)]
    if T.implicative:
        ops += [("⊃", T.weak_imp), ("⇒", T.strong_imp), ("∗", T.fusion)]
    return ops


def cmd_twist(args, out: Output):
    data = _load(args)
    lattices = _pick(data.lattices, args.lattice, "lattice")
    if len(lattices) != 1:
        raise UsageError("several lattices in the file; choose one with --lattice")
    L = next(iter(lattices.values()))
    M = _pick(data.lattices, args.minus, "lattice")[args.minus] if args.minus else L
    T = twist_construct(L, M)
    names = [fmt(x) for x in T.carrier]
    out.write(f"twist {L.name} ⋈ {M.name}: {len(T.carrier)} elements")
    if T.symmetric:
        out.write("¬")
        for x in T.carrier:
            out.write(f"  {fmt(x)} ↦ {fmt(T.neg(x))}")
    for sym, op in _twist_ops(T):
        out.write(sym)
        cells = [[fmt(op(x, y)) for y in T.carrier] for x in T.carrier]
        out.lines.extend(_grid(names, names, cells))


def cmd_represent(args, out: Output):
    for name, L in _pick(_load(args).lattices, args.lattice, "lattice").items():
        r = Report(f"represent twist({name})")
        if not is_distributive(L):
            r.add("lattice is distributive", False, fmt(L.distributivity_witness))
            out.report(r)
            continue
        B = AbstractBilattice.from_twist(twist_construct(L), name=f"twist({name})")
        Lr, phi = twist_representation(B)
        out.write(f"[⊥,t] of twist({name}): {' '.join(fmt(x) for x in Lr.elements)}")
        for x in B.carrier:
            out.write(f"  φ{fmt(x)} = {fmt(phi[x])}")
        back = AbstractBilattice.from_twist(twist_construct(Lr))
        iso = find_isomorphism(B, back)
        r.add("φ preserves ⊓ ⊔ ∧· ∨· ¬ and is bijective", True, f"{len(phi)} elements")
        r.add("twist([⊥,t]) ≅ original", iso is not None, "" if iso else "no isomorphism")
        out.report(r)


# -- Chu -------------------------------------------------------------------------

def _heyting(data, name):
    for n, L in _pick(data.lattices, name, "lattice").items():
        if not is_distributive(L):
            raise UsageError(f"lattice {n} is not distributive: {fmt(L.distributivity_witness)}")
        yield n, L


def cmd_chu_table(args, out: Output):
    conn = ALIASES.get(args.connective, args.connective)
    if conn not in BINARY + UNARY:
        raise UsageError(f"unknown connective {args.connective!r}; one of {' '.join(BINARY + UNARY)}")
    for name, H in _heyting(_load(args), args.lattice):
        M = ChuModel(H)
        out.write(f"{conn} on Chu({name},0): {len(M.carrier)} elements")
        for row in chu_table(M, conn):
            out.write("  " + " ".join(fmt(a) for a in row[:-1]) + f" ↦ {fmt(row[-1])}")


def cmd_chu_verify(args, out: Output):
    for name, H in _heyting(_load(args), args.lattice):
        M = ChuModel(H)
        r = Report(f"Chu({name},0) closure")
        bad = closure_violation(M)
        r.add("every connective stays in the carrier", bad is None, fmt(bad) if bad else "")
        out.report(r)
        out.report(verify_term_definability(M))
        out.report(verify_chu_identities(M))


# -- d-frames --------------------------------------------------------------------

def cmd_dframe_check(args, out: Output):
    for name, D in _pick(_load(args).dframes, args.name, "dframe").items():
        out.report(check_dframe(D.base if isinstance(D, NdFrame) else D))
        if isinstance(D, NdFrame):
            out.report(check_ndframe(D))


def _ndframes(data, name):
    frames = {n: D for n, D in _pick(data.dframes, name, "dframe").items() if isinstance(D, NdFrame)}
    if not frames:
        raise UsageError("no nd-frame (a dframe block with p and m lines) to verify")
    return frames


def cmd_ndframe_verify(args, out: Output):
    for N in _ndframes(_load(args), args.name).values():
        structural = check_ndframe(N)
        out.report(structural)
        if not structural.passed or not check_dframe(N.base).passed:
            out.write(f"  skipping the axiom suite: {N.name} is not an nd-frame")
            continue
        out.report(axiom_suite(N, args.domain))


def cmd_partial_roundtrip(args, out: Output):
    for name, D in _pick(_load(args).dframes, args.name, "dframe").items():
        base = D.base if isinstance(D, NdFrame) else D
        r = Report(f"partial frame of {name}")
        iso = partial_roundtrip(base)
        r.add("d-frame ≅ d-frame rebuilt from its partial frame", iso is not None,
              f"{len(base.con)} con-elements" if iso else "no isomorphism")
        out.report(r)
        if isinstance(D, NdFrame):
            out.report(prec_suite(D))


# -- blame -------------------------------------------------------------------------

def _carriers(args):
    if getattr(args, "file", None):
        data = _load(args)
        if data.carriers:
            return data.carriers, data
        return (INT4, BOOL), data
    return (INT4, BOOL), None


def cmd_blame_subtype(args, out: Output):
    rel = REL_NAMES.get(args.rel)
    if rel is None:
        raise UsageError(f"unknown relation {args.rel!r}; one of {' '.join(REL_NAMES)}")
    carriers, _ = _carriers(args)
    S, T = parse_type(args.source, carriers), parse_type(args.target, carriers)
    out.write(f"{S} {args.rel} {T}: {'true' if subtype(rel, S, T) else 'false'}")


def cmd_blame_eval(args, out: Output):
    carriers, data = _carriers(args)
    if not data.terms:
        raise UsageError("the file defines no terms")
    universe = Universe(carriers)
    for name, text in data.terms.items():
        out.write(f"{name}: {eval_cast(parse_term(text, universe), universe)}")


def cmd_blame_verify(args, out: Output):
    if not 1 <= args.depth <= 3:
        raise UsageError("--depth must be 1, 2 or 3")
    out.report(check_decomposition(args.depth, timings=args.timings))
    out.report(blame_safety_suite(min(args.depth, 2), timings=args.timings))


# -- LVars ---------------------------------------------------------------------------

def cmd_lvar_simulate(args, out: Output):
    for name, sched in _pick(_load(args).schedules, args.name, "schedule").items():
        out.write(f"schedule {name}: {len(sched.threads)} threads, {sched.size} operations")
        orders = interleavings(sched) if args.all_interleavings else [round_robin(sched)]
        for order in orders:
            out.write("  " + show_trace(simulate(sched, order)))
        out.report(determinism_check(sched))


def cmd_lvar_verify(args, out: Output):
    for name, sched in _pick(_load(args).schedules, args.name, "schedule").items():
        r = Report(f"join semilattice {sched.lattice.name}")
        bad = sched.lattice.law_violation()
        r.add("join laws", bad is None, f"{bad[0]} at {fmt(bad[1])}" if bad else "")
        out.report(r)
        out.report(determinism_check(sched))


# -- wiring ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", default=argparse.SUPPRESS,
                        help="one check per line: name<TAB>pass|fail<TAB>witness")
    common.add_argument("--fixtures", metavar="DIR", default=argparse.SUPPRESS,
                        help="directory searched for structure files")

    p = _Parser(prog="twistlab", parents=[common],
                description="Exhaustive checks for bilattices, Chu models, d-frames, blame and LVars.")
    sub = p.add_subparsers(dest="module", required=True, parser_class=_Parser)

    def command(parent, name, fn, help_=None):
        c = parent.add_parser(name, parents=[common], help=help_)
        c.set_defaults(fn=fn)
        return c

    lat = sub.add_parser("lattice").add_subparsers(dest="command", required=True, parser_class=_Parser)
    c = command(lat, "check", cmd_lattice_check, "lattice laws, distributivity, Boolean-ness")
    c.add_argument("file")
    c.add_argument("--name")
    c.add_argument("--distributive", action="store_true", help="fail unless distributive")
    c.add_argument("--boolean", action="store_true", help="fail unless Boolean")

    c = command(sub, "twist", cmd_twist, "operation tables of L₊ ⋈ L₋")
    c.add_argument("file")
    c.add_argument("--lattice")
    c.add_argument("--minus", help="second factor (defaults to the first)")

    c = command(sub, "represent", cmd_represent, "decompose twist(L) back into L⋈L")
    c.add_argument("file")
    c.add_argument("--lattice")

    chu = sub.add_parser("chu").add_subparsers(dest="command", required=True, parser_class=_Parser)
    c = command(chu, "table", cmd_chu_table)
    c.add_argument("file")
    c.add_argument("connective")
    c.add_argument("--lattice")
    c = command(chu, "verify", cmd_chu_verify)
    c.add_argument("file")
    c.add_argument("--lattice")

    df = sub.add_parser("dframe").add_subparsers(dest="command", required=True, parser_class=_Parser)
    c = command(df, "check", cmd_dframe_check)
    c.add_argument("file")
    c.add_argument("--name")

    nd = sub.add_parser("ndframe").add_subparsers(dest="command", required=True, parser_class=_Parser)
    c = command(nd, "verify", cmd_ndframe_verify)
    c.add_argument("file")
    c.add_argument("--name")
    c.add_argument("--domain", choices=("all", "con"), default="all",
                   help="valuations range over all pairs or over con-elements")

    pf = sub.add_parser("partial").add_subparsers(dest="command", required=True, parser_class=_Parser)
    c = command(pf, "roundtrip", cmd_partial_roundtrip)
    c.add_argument("file")
    c.add_argument("--name")

    bl = sub.add_parser("blame").add_subparsers(dest="command", required=True, parser_class=_Parser)
    c = command(bl, "subtype", cmd_blame_subtype)
    c.add_argument("rel")
    c.add_argument("source")
    c.add_argument("target")
    c.add_argument("--file", help="structure file with carrier blocks")
    c = command(bl, "eval", cmd_blame_eval)
    c.add_argument("file")
    c = command(bl, "verify", cmd_blame_verify)
    c.add_argument("--depth", type=int, default=2)
    c.add_argument("--timings", action="store_true", help="append wall-clock times (not deterministic)")

    lv = sub.add_parser("lvar").add_subparsers(dest="command", required=True, parser_class=_Parser)
    c = command(lv, "simulate", cmd_lvar_simulate)
    c.add_argument("file")
    c.add_argument("--name")
    c.add_argument("--all-interleavings", action="store_true")
    c = command(lv, "verify", cmd_lvar_verify)
    c.add_argument("file")
    c.add_argument("--name")
    return p


def run_command(argv) -> tuple[int, str]:
    """Run one command; returns (exit status, rendered output)."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return 2, f"usage error: {exc}\n"
    args.machine = getattr(args, "machine", False)
    args.fixtures = getattr(args, "fixtures", None)
    out = Output(args.machine)
    try:
        args.fn(args, out)
    except UsageError as exc:
        return 2, out.text() + f"usage error: {exc}\n"
    except TwistlabError as exc:
        return 2, out.text() + f"error: {type(exc).__name__}: {exc}\n"
    return out.status, out.text()


def main(argv=None) -> int:
    status, text = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if status != 2 else sys.stderr
    stream.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
