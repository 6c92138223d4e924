"""Four-valued formulas over nd-frames: syntax, evaluation, validity and the axiom suite.

A formula is valid when its value lies ⊑-above tt under every valuation, i.e.
its positive component is the top of L₊.  Validity is decided by evaluating
the formula once over the whole grid of valuations with numpy index arrays;
:func:`evaluate` is the slow scalar route used to cross-check it.
"""
from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from .lattice import fmt, is_boolean
from .report import Report

BINARY = {"and": "∧·", "or": "∨·", "kmeet": "⊓", "kjoin": "⊔", "imp": "⊃"}
CONSTANTS = {"ff", "tt", "bot", "top"}
_CONST_GLYPH = {"ff": "ff", "tt": "tt", "bot": "⊥", "top": "⊤"}
_VAR_GLYPH = {"phi": "φ", "psi": "ψ", "gamma": "γ"}


@dataclass(frozen=True)
class Formula:
    op: str
    args: tuple = ()
    name: str = ""

    def __and__(self, other):
        return Formula("and", (self, other))

    def __or__(self, other):
        return Formula("or", (self, other))

    def __invert__(self):
        return Formula("neg", (self,))

    def __rshift__(self, other):
        return Formula("imp", (self, other))

    def variables(self) -> set:
        if self.op == "var":
            return {self.name}
        out = set()
        for a in self.args:
            out |= a.variables()
        return out

    def __str__(self):
        if self.op == "var":
            return _VAR_GLYPH.get(self.name, self.name)
        if self.op == "const":
            return _CONST_GLYPH[self.name]
        if self.op == "neg":
            inner = self.args[0]
            s = str(inner)
            return "¬" + (s if inner.op in ("var", "const", "neg") else f"({s})")
        parts = []
        for a in self.args:
            s = str(a)
            parts.append(s if a.op in ("var", "const", "neg") else f"({s})")
        return f"{parts[0]}{BINARY[self.op]}{parts[1]}"


def var(name: str) -> Formula:
    return Formula("var", (), name)


def const(name: str) -> Formula:
    if name not in CONSTANTS:
        raise ValueError(f"unknown constant {name!r}")
    return Formula("const", (), name)


def kmeet(a, b):
    return Formula("kmeet", (a, b))


def kjoin(a, b):
    return Formula("kjoin", (a, b))


def strong_imp(a, b):
    return (a >> b) & (~b >> ~a)


def equiv(a, b):
    return (a >> b) & (b >> a)


def substitute(phi: Formula, sigma: dict) -> Formula:
    if phi.op == "var":
        return sigma.get(phi.name, phi)
    if not phi.args:
        return phi
    return Formula(phi.op, tuple(substitute(a, sigma) for a in phi.args), phi.name)


PHI, PSI, GAMMA = var("phi"), var("psi"), var("gamma")
FF, TT, BOT, TOP = const("ff"), const("tt"), const("bot"), const("top")


# -- scalar evaluation ---------------------------------------------------------

def evaluate(N, phi: Formula, valuation: dict):
    """Value of ``phi`` in ``N`` under ``valuation`` (variable name -> pair)."""
    op = phi.op
    if op == "var":
        return valuation[phi.name]
    if op == "const":
        return {"ff": N.ff, "tt": N.tt,
                "bot": (N.plus.bottom, N.minus.bottom),
                "top": (N.plus.top, N.minus.top)}[phi.name]
    vals = [evaluate(N, a, valuation) for a in phi.args]
    if op == "neg":
        return N.neg(vals[0])
    method = {"and": N.land, "or": N.lor, "kmeet": N.kmeet, "kjoin": N.kjoin, "imp": N.weak_imp}[op]
    return method(*vals)


# -- vectorized evaluation -----------------------------------------------------

class GridEvaluator:
    """Evaluates formulas simultaneously over every valuation in a domain."""

    def __init__(self, N, variables=("phi", "psi", "gamma"), domain: str = "all"):
        self.N = N
        L, M = N.plus, N.minus
        self.L, self.M = L, M
        self.meetP = np.array(L.meet_table())
        self.joinP = np.array(L.join_table())
        self.impP = np.array([[L.index(L.implies(a, b)) for b in L.elements] for a in L.elements])
        self.meetM = np.array(M.meet_table())
        self.joinM = np.array(M.join_table())
        self.p = np.array([L.index(N.p(b)) for b in M.elements])
        self.m = np.array([M.index(N.m(a)) for a in L.elements])
        self.topP, self.botP = L.index(L.top), L.index(L.bottom)
        self.topM, self.botM = M.index(M.top), M.index(M.bottom)
        if domain == "all":
            pairs = N.pairs()
        elif domain == "con":
            pairs = N.con_elements()
        else:
            raise ValueError(f"unknown valuation domain {domain!r}")
        self.domain = pairs
        self.variables = tuple(variables)
        dp = np.array([L.index(a) for a, _ in pairs])
        dm = np.array([M.index(b) for _, b in pairs])
        k = len(self.variables)
        grid = np.indices((len(pairs),) * k).reshape(k, -1) if k else np.zeros((0, 1), dtype=int)
        self.grid = grid
        self.env = {v: (dp[grid[i]], dm[grid[i]]) for i, v in enumerate(self.variables)}
        self.size = grid.shape[1]

    def eval(self, phi: Formula):
        op = phi.op
        if op == "var":
            return self.env[phi.name]
        if op == "const":
            full = np.ones(self.size, dtype=int)
            a, b = {"ff": (self.botP, self.topM), "tt": (self.topP, self.botM),
                    "bot": (self.botP, self.botM), "top": (self.topP, self.topM)}[phi.name]
            return a * full, b * full
        if op == "neg":
            xp, xm = self.eval(phi.args[0])
            return self.p[xm], self.m[xp]
        (xp, xm), (yp, ym) = self.eval(phi.args[0]), self.eval(phi.args[1])
        if op == "and":
            return self.meetP[xp, yp], self.joinM[xm, ym]
        if op == "or":
            return self.joinP[xp, yp], self.meetM[xm, ym]
        if op == "kmeet":
            return self.meetP[xp, yp], self.meetM[xm, ym]
        if op == "kjoin":
            return self.joinP[xp, yp], self.joinM[xm, ym]
        if op == "imp":
            return self.impP[xp, yp], self.meetM[self.m[xp], ym]
        raise ValueError(f"unknown connective {op!r}")

    def holds(self, phi: Formula) -> np.ndarray:
        return self.eval(phi)[0] == self.topP

    def valuation(self, column: int) -> dict:
        return {v: self.domain[self.grid[i, column]] for i, v in enumerate(self.variables)}

    def counterexample(self, phi: Formula):
        bad = np.flatnonzero(~self.holds(phi))
        return self.valuation(int(bad[0])) if bad.size else None


def _evaluator(N, phi, domain):
    return GridEvaluator(N, sorted(phi.variables()), domain)


def validate_formula(N, phi: Formula, domain: str = "all") -> bool:
    """True iff tt ⊑ v(phi) for every valuation (over all pairs, or only con-pairs)."""
    return bool(_evaluator(N, phi, domain).holds(phi).all())


def formula_counterexample(N, phi: Formula, domain: str = "all"):
    return _evaluator(N, phi, domain).counterexample(phi)


# -- the axiom schemas ---------------------------------------------------------

@dataclass(frozen=True)
class Schema:
    name: str
    formula: Formula
    star: str | None = None
    strengthened: Formula | None = None


def _schemas():
    f, g, h = PHI, PSI, GAMMA
    out = [
        Schema("(⊃1)", f >> (g >> f)),
        Schema("(⊃2)", (f >> (g >> h)) >> ((f >> g) >> (f >> h))),
        Schema("(¬¬R)", ~~f >> f, "A", equiv(~~f, f)),
        Schema("(∧⊃) left", (f & g) >> f),
        Schema("(∧⊃) right", (f & g) >> g),
        Schema("(⊃∧)", f >> (g >> (f & g))),
        Schema("(⊃tt)", f >> TT),
        Schema("(⊃∨) left", f >> (f | g)),
        Schema("(⊃∨) right", g >> (f | g)),
        Schema("(∨⊃)", (f >> h) >> ((g >> h) >> ((f | g) >> h))),
        Schema("(⊃ff)", FF >> f),
        Schema("(⊓⊃) left", kmeet(f, g) >> f),
        Schema("(⊓⊃) right", kmeet(f, g) >> g),
        Schema("(⊃⊓)", f >> (g >> kmeet(f, g))),
        Schema("(⊃⊤)", f >> TOP),
        Schema("(⊃⊔) left", f >> kjoin(f, g)),
        Schema("(⊃⊔) right", g >> kjoin(f, g)),
        Schema("(⊔⊃)", (f >> h) >> ((g >> h) >> (kjoin(f, g) >> h))),
        Schema("(⊃⊥)", BOT >> f),
        Schema("(¬∧L)", (~f | ~g) >> ~(f & g), "B", equiv(~(f & g), ~f | ~g)),
        Schema("(¬∨)", equiv(~(f | g), ~f & ~g)),
        Schema("(¬⊓)", equiv(~kmeet(f, g), kmeet(~f, ~g))),
        Schema("(¬⊔L)", kjoin(~f, ~g) >> ~kjoin(f, g), "B", equiv(~kjoin(f, g), kjoin(~f, ~g))),
        Schema("(¬⊃R)", ~(f >> g) >> (f & ~g), "A", equiv(~(f >> g), f & ~g)),
    ]
    return out


SCHEMAS = _schemas()
PEIRCE = ((PHI >> PSI) >> PHI) >> PHI
DOUBLE_NEG_INTRO = PHI >> ~~PHI

_SUBSTITUTIONS = [
    {"phi": ~PSI},
    {"phi": PHI >> PSI, "psi": ~GAMMA},
    {"phi": PHI & GAMMA, "gamma": kjoin(PHI, PSI)},
    {"psi": kmeet(~PHI, GAMMA), "gamma": PSI | FF},
]
_ATOMS = [PHI, PSI, GAMMA, ~PHI, ~~PSI, PHI & PSI, PHI | PSI, kmeet(PHI, PSI), kjoin(PHI, PSI),
          PHI >> PSI, strong_imp(PHI, PSI), FF, TT, BOT, TOP]


def mp_family() -> list[Formula]:
    """Schemas, their one-level substitution instances, and small atoms."""
    fam = list(_ATOMS)
    for s in SCHEMAS:
        fam.append(s.formula)
        fam.extend(substitute(s.formula, sigma) for sigma in _SUBSTITUTIONS)
    fam.append(PEIRCE)
    seen, out = set(), []
    for phi in fam:
        if phi not in seen:
            seen.add(phi)
            out.append(phi)
    return out


def modus_ponens_violation(N, family=None, domain: str = "all"):
    """First (φ, ψ) in family² with φ and φ⊃ψ valid but ψ not, or None."""
    family = mp_family() if family is None else family
    G = GridEvaluator(N, ("phi", "psi", "gamma"), domain)
    values = [G.eval(phi)[0] for phi in family]
    valid = [bool((v == G.topP).all()) for v in values]
    for i, a in enumerate(values):
        if not valid[i]:
            continue
        for j, b in enumerate(values):
            if not valid[j] and (G.impP[a, b] == G.topP).all():
                return family[i], family[j]
    return None


def _describe(cex) -> str:
    return ", ".join(f"{_VAR_GLYPH.get(k, k)}={fmt(v)}" for k, v in cex.items())


def axiom_suite(N, domain: str = "all") -> Report:
    r = Report(f"axiom suite {N.name}")
    for s in SCHEMAS:
        cex = formula_counterexample(N, s.formula, domain)
        r.add(f"{s.name} {s.formula}", cex is None, _describe(cex) if cex else "")
    family = mp_family()
    bad = modus_ponens_violation(N, family, domain)
    r.add(f"(MP) sound on {len(family)}² instantiated pairs", bad is None,
          f"{bad[0]} ; {bad[1]}" if bad else "")

    pm_id, p_joins = N.pm_is_identity(), N.p_preserves_joins()
    for star, fact, fact_name in (("A", pm_id, "p∘m = id"), ("B", p_joins, "p preserves ∨")):
        strong = []
        for s in SCHEMAS:
            if s.star != star:
                continue
            cex = formula_counterexample(N, s.strengthened, domain)
            strong.append(cex is None)
            r.add(f"★{star} {s.name} as ≡", cex is None,
                  f"fails at {_describe(cex)}" if cex else "valid", info=True)
        valid = all(strong)
        r.add(f"★{star} strengthened valid ⇔ {fact_name}", valid == fact,
              f"strengthened valid: {_yes(valid)}; {fact_name}: {_yes(fact)}")
    peirce = validate_formula(N, PEIRCE, domain)
    boolean = is_boolean(N.plus)
    r.add("Peirce valid ⇔ L₊ Boolean", peirce == boolean,
          f"Peirce valid: {_yes(peirce)}; L₊ Boolean: {_yes(boolean)}")
    return r


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"
