"""Exhaustive suites: the decomposition of subtyping and blame safety."""
from __future__ import annotations

import time

import numpy as np

from ..report import Report
from .casts import DYN_FUN, FUN_TAG, BlameLabel, BlameRaised, Tagged, Universe
from .types import (BOOL, DECOMPOSITION_CONFIG, DYN, FUN_RULES, RELATIONS, Carrier, Dyn, Fun,
                    TypeConfig, compatible, refine, subtype)


def relation_matrices(types: list, rules: dict = FUN_RULES) -> dict:
    """rel -> boolean matrix M[i, j] = types[i] rel types[j], by direct calls."""
    n = len(types)
    out = {}
    for rel in RELATIONS:
        m = np.zeros((n, n), dtype=bool)
        for i, S in enumerate(types):
            for j, T in enumerate(types):
                m[i, j] = subtype(rel, S, T, rules)
        out[rel] = m
    return out


def lifted_matrices(config: TypeConfig, max_depth: int, rules: dict = FUN_RULES):
    """Relation matrices over ``config.types(max_depth)``.

    The function-versus-function block at the top level is assembled from the
    matrices one level down with the same rule table the scalar decision uses;
    every other entry comes from direct calls.
    """
    if max_depth <= 2:
        types = config.types(max_depth)
        return types, relation_matrices(types, rules)
    inner_types, inner = lifted_matrices(config, max_depth - 1, rules)
    ground = config.ground_types()
    k, g = len(inner_types), len(ground)
    types = config.types(max_depth)
    n = len(types)
    out = {}
    for rel in RELATIONS:
        m = np.zeros((n, n), dtype=bool)
        for i, S in enumerate(types):
            for j in range(g):
                m[i, j] = subtype(rel, S, types[j], rules)
        for i in range(g):
            for j in range(g, n):
                m[i, j] = subtype(rel, types[i], types[j], rules)
        dom_rel, swap, cod_rel = rules[rel]
        D = inner[dom_rel]
        D = D.T if swap else D          # D[a, c] = dom verdict for Fun(a,·) vs Fun(c,·)
        C = inner[cod_rel]
        block = D[:, None, :, None] & C[None, :, None, :]
        m[g:, g:] = block.reshape(k * k, k * k)
        out[rel] = m
    return types, out


def check_decomposition(max_depth: int, config: TypeConfig = DECOMPOSITION_CONFIG,
                        rules: dict = FUN_RULES, samples: int = 3000,
                        timings: bool = True) -> Report:
    start = time.perf_counter()
    types, R = lifted_matrices(config, max_depth, rules)
    n = len(types)
    r = Report(f"decomposition depth ≤ {max_depth}")
    std, naive, pos, neg = R["standard"], R["naive"], R["positive"], R["negative"]
    for name, lhs, rhs in (("S <: T ⇔ S <:⁺ T ∧ S <:⁻ T", std, pos & neg),
                           ("S <:ₙ T ⇔ S <:⁺ T ∧ T <:⁻ S", naive, pos & neg.T)):
        bad = np.argwhere(lhs != rhs)
        witness = ""
        if len(bad):
            i, j = bad[0]
            witness = f"{len(bad)} counterexamples, first S = {types[i]}, T = {types[j]}"
        r.add(name, not len(bad), witness)

    # cross-check the assembled matrices against direct calls on a strided sample
    mismatch = None
    checked = 0
    stride = max(1, (n * n) // samples)
    for flat in range(0, n * n, stride):
        i, j = divmod(flat, n)
        checked += 1
        for rel in RELATIONS:
            if R[rel][i, j] != subtype(rel, types[i], types[j], rules):
                mismatch = (rel, types[i], types[j])
                break
        if mismatch:
            break
    r.add(f"matrix entries agree with direct decisions ({checked} sampled pairs)", mismatch is None,
          "" if mismatch is None else f"{mismatch[0]} at {mismatch[1]}, {mismatch[2]}")
    elapsed = time.perf_counter() - start
    size = f"{n} types, {n * n} ordered pairs"
    r.add("enumeration", True, f"{size}, {elapsed:.2f}s" if timings else size, info=True)
    return r


def transitivity_failure(types: list, m: np.ndarray):
    """First (i, j, k) with m[i,j], m[j,k] and not m[i,k], or None."""
    comp = (m.astype(np.float32) @ m.astype(np.float32)) > 0
    bad = np.argwhere(comp & ~m)
    if not len(bad):
        return None
    i, k = bad[0]
    j = int(np.flatnonzero(m[i] & m[:, k])[0])
    return types[i], types[j], types[k]


# -- blame safety --------------------------------------------------------------

INT_SIGNED = Carrier("int", (-1, 0))
SAFETY_CONFIG = TypeConfig((INT_SIGNED, BOOL), ((frozenset({0}),), (frozenset({"tt"}),)))

LABEL = BlameLabel("p")
CONTEXT = BlameLabel("q")


def exercise(value, ty, universe: Universe, sink: set):
    """Apply function values to every argument of their domain, recursively."""
    if not isinstance(ty, Fun):
        return
    for arg in universe.values(ty.dom):
        try:
            out = value.apply(arg)
        except BlameRaised as exc:
            sink.add(exc.label)
            continue
        exercise(out, ty.cod, universe, sink)


def _deep_dyn(value, universe: Universe, sink: set):
    """Project a dyn-tagged function to dyn -> dyn and exercise it."""
    if isinstance(value, Tagged) and value.tag == FUN_TAG:
        try:
            g = universe.cast(value, DYN, DYN_FUN, CONTEXT)
        except BlameRaised as exc:
            sink.add(exc.label)
            return
        exercise(g, DYN_FUN, universe, sink)


def blame_safety_suite(max_depth: int = 2, config: TypeConfig = SAFETY_CONFIG,
                       timings: bool = True) -> Report:
    start = time.perf_counter()
    universe = Universe(config.carriers)
    types = config.types(max_depth)
    r = Report(f"blame safety depth ≤ {max_depth}")
    violations = {"positive": [], "negative": [], "standard": []}
    dyn_negative = []
    pairs = casts = 0
    for S in types:
        values = universe.values(S)
        for T in types:
            if not compatible(S, T):
                continue
            pairs += 1
            claims = {rel: subtype(rel, S, T) for rel in ("standard", "positive", "negative")}
            blamed = set()
            deep = set()
            for v in values:
                casts += 1
                try:
                    out = universe.cast(v, S, T, LABEL)
                except BlameRaised as exc:
                    blamed.add(exc.label)
                    continue
                exercise(out, T, universe, blamed)
                if isinstance(T, Dyn) and isinstance(S, Fun):
                    _deep_dyn(out, universe, deep)
            pos = LABEL in blamed
            neg = LABEL.negate() in blamed
            if claims["positive"] and pos:
                violations["positive"].append((S, T))
            if claims["negative"] and neg:
                violations["negative"].append((S, T))
            if claims["standard"] and (pos or neg):
                violations["standard"].append((S, T))
            if claims["negative"] and LABEL.negate() in deep:
                dyn_negative.append((S, T))
    for rel, sym in (("positive", "<:⁺"), ("negative", "<:⁻"), ("standard", "<:")):
        bad = violations[rel]
        label = {"positive": "no positive blame", "negative": "no negative blame",
                 "standard": "no blame at all"}[rel]
        r.add(f"S {sym} T ⇒ {label}", not bad,
              f"{len(bad)} pairs, first {bad[0][0]} => {bad[0][1]}" if bad else "")
    r.add("dyn-tagged functions projected and applied by a context", not dyn_negative,
          f"{len(dyn_negative)} pairs with S <:⁻ dyn meet negative blame, first {dyn_negative[0][0]}"
          if dyn_negative else "no negative blame", info=True)

    r.extend(refinement_example())
    elapsed = time.perf_counter() - start
    size = f"{len(types)} types, {pairs} compatible pairs, {casts} casts"
    r.add("enumeration", True, f"{size}, {elapsed:.2f}s" if timings else size, info=True)
    return r


def refinement_example(carrier: Carrier = Carrier("int", (-1, 0, 1, 2)),
                       nat=(0, 1, 2)) -> Report:
    """Casting int to {x ≥ 0}: positive blame exactly off the subset, never negative."""
    universe = Universe((carrier,))
    S, T = refine(carrier, carrier.values), refine(carrier, nat)
    r = Report("refinement example")
    outcomes = {}
    for v in carrier.values:
        try:
            outcomes[v] = universe.cast(v, S, T, LABEL)
        except BlameRaised as exc:
            outcomes[v] = exc.label
    positive = [v for v, o in outcomes.items() if o == LABEL]
    negative = [v for v, o in outcomes.items() if o == LABEL.negate()]
    expected = [v for v in carrier.values if v not in nat]
    r.add(f"int => {T}: positive blame exactly on {expected}", positive == expected,
          f"blamed on {positive}")
    r.add(f"int => {T}: never negative blame", not negative, ",".join(map(str, negative)))
    r.add(f"{S} <:⁺ {T} is false", not subtype("positive", S, T))
    r.add(f"{T} <:⁺ {S} holds", subtype("positive", T, S))
    return r
