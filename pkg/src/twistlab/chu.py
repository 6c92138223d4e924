"""Chu(H, 0): pairs over a finite Heyting algebra with a₊ ∧ a₋ = 0.

Connectives are computed on demand from H's cached implication table.  The
verification reports compare each connective with its definition as a term
of the twist algebra H ⋈ H.
"""
from __future__ import annotations

from itertools import product
from typing import Callable

from .bilattice import TwistAlgebra
from .errors import NotHeyting, NotInCarrier
from .lattice import FiniteLattice, fmt, is_distributive
from .report import Report

BINARY = ("⊕", "⊗", "&", "⅋", "⊸")
UNARY = ("⊥ᴸ", "!", "?")
ALIASES = {"plus": "⊕", "tensor": "⊗", "with": "&", "par": "⅋", "lolli": "⊸", "-o": "⊸",
           "perp": "⊥ᴸ", "⊥": "⊥ᴸ", "bang": "!", "whynot": "?"}


class ChuModel:
    def __init__(self, heyting: FiniteLattice, overrides: dict | None = None):
        if not is_distributive(heyting):
            raise NotHeyting(f"{heyting.name} is not distributive")
        self.heyting = H = heyting
        self._imp = H.implication_table
        self.carrier = tuple((a, b) for a, b in product(H.elements, repeat=2)
                             if H.meet(a, b) == H.bottom)
        self._members = frozenset(self.carrier)
        self.tt = (H.top, H.bottom)
        self.ff = (H.bottom, H.top)
        self.twist = TwistAlgebra(H, H)
        self._ops: dict[str, Callable] = {
            "⊕": self._plus, "⊗": self._tensor, "&": self._with, "⅋": self._par,
            "⊸": self._lolli, "⊥ᴸ": self._perp, "!": self._bang, "?": self._whynot,
        }
        self._overrides = dict(overrides or {})
        self._ops.update(self._overrides)

    def __repr__(self):
        return f"Chu({self.heyting.name},0)"

    def __contains__(self, x):
        return x in self._members

    def mutated(self, connective: str, fn: Callable) -> "ChuModel":
        """A copy with one connective replaced; used for regression guards."""
        overrides = {**self._overrides, ALIASES.get(connective, connective): fn}
        return ChuModel(self.heyting, overrides)

    def _i(self, a, b):
        return self._imp[(a, b)]

    def _plus(self, a, b):
        H = self.heyting
        return (H.meet(a[0], b[0]), H.join(a[1], b[1]))

    def _tensor(self, a, b):
        H = self.heyting
        return (H.meet(a[0], b[0]), H.meet(self._i(a[0], b[1]), self._i(b[0], a[1])))

    def _with(self, a, b):
        H = self.heyting
        return (H.join(a[0], b[0]), H.meet(a[1], b[1]))

    def _par(self, a, b):
        H = self.heyting
        return (H.meet(self._i(a[1], b[0]), self._i(b[1], a[0])), H.meet(a[1], b[1]))

    def _lolli(self, a, b):
        H = self.heyting
        return (H.meet(self._i(a[0], b[0]), self._i(b[1], a[1])), H.meet(a[0], b[1]))

    def _perp(self, a):
        return (a[1], a[0])

    def _bang(self, a):
        return (a[0], self._i(a[0], self.heyting.bottom))

    def _whynot(self, a):
        return (self._i(a[1], self.heyting.bottom), a[1])

    def apply(self, connective: str, *args):
        """Evaluate without membership checks (raw formula)."""
        return self._ops[ALIASES.get(connective, connective)](*args)

    def embed(self, x):
        """e(x) = (x, x → 0)."""
        return (x, self._i(x, self.heyting.bottom))


def chu_carrier(H: FiniteLattice) -> ChuModel:
    return ChuModel(H)


def chu_eval(M: ChuModel, connective: str, *args):
    name = ALIASES.get(connective, connective)
    if name not in BINARY + UNARY:
        raise ValueError(f"unknown connective {connective!r}")
    expected = 1 if name in UNARY else 2
    if len(args) != expected:
        raise TypeError(f"{name} takes {expected} argument(s)")
    for a in args:
        if a not in M:
            raise NotInCarrier(f"{fmt(a)} is not in {M!r}")
    out = M.apply(name, *args)
    assert out in M, f"{name} left the carrier: {fmt(out)}"
    return out


def chu_table(M: ChuModel, connective: str) -> list[tuple]:
    """Rows (args..., result) in carrier order."""
    name = ALIASES.get(connective, connective)
    if name in UNARY:
        return [(a, chu_eval(M, name, a)) for a in M.carrier]
    return [(a, b, chu_eval(M, name, a, b)) for a, b in product(M.carrier, repeat=2)]


def _scan(r: Report, name: str, cases, lhs, rhs, info=False):
    cases = list(cases)
    bad = next((c for c in cases if lhs(*c) != rhs(*c)), None)
    witness = "holds" if info else ""
    if bad is not None:
        witness = f"at {', '.join(fmt(x) for x in bad)}: {fmt(lhs(*bad))} ≠ {fmt(rhs(*bad))}"
    r.add(f"{name} ({len(cases)} cases)", bad is None, witness, info=info)


def verify_term_definability(M: ChuModel) -> Report:
    r = Report(f"term definability {M!r}")
    T = M.twist
    pairs = list(product(M.carrier, repeat=2))
    singles = [(a,) for a in M.carrier]
    op = M.apply
    _scan(r, "a⊕b = a∧·b", pairs, lambda a, b: op("⊕", a, b), T.land)
    _scan(r, "a&b = a∨·b", pairs, lambda a, b: op("&", a, b), T.lor)
    _scan(r, "a⊥ = ¬a", singles, lambda a: op("⊥ᴸ", a), T.neg)
    _scan(r, "a⊗b = ¬(a⇒¬b)", pairs, lambda a, b: op("⊗", a, b),
          lambda a, b: T.neg(T.strong_imp(a, T.neg(b))))
    _scan(r, "a⅋b = ¬a⇒b", pairs, lambda a, b: op("⅋", a, b),
          lambda a, b: T.strong_imp(T.neg(a), b))
    _scan(r, "a⊸b = a⇒b", pairs, lambda a, b: op("⊸", a, b), T.strong_imp)
    _scan(r, "!a = ¬(a⊃ff)", singles, lambda a: op("!", a), lambda a: T.neg(T.weak_imp(a, T.ff)))
    _scan(r, "?a = ¬a⊃ff", singles, lambda a: op("?", a), lambda a: T.weak_imp(T.neg(a), T.ff))
    # the tensor is also the fusion of the twist algebra
    _scan(r, "a⊗b = a∗b", pairs, lambda a, b: op("⊗", a, b), T.fusion, info=True)
    return r


def _mutual_lolli(M: ChuModel, x, y) -> bool:
    top = M.heyting.top
    return M.apply("⊸", x, y)[0] == top and M.apply("⊸", y, x)[0] == top


def verify_chu_identities(M: ChuModel) -> Report:
    r = Report(f"side identities {M!r}")
    H, T, op = M.heyting, M.twist, M.apply
    singles = [(a,) for a in M.carrier]
    triples = list(product(M.carrier, repeat=3))
    _scan(r, "(i) !a = (a₊, a₊→a₋)", singles, lambda a: op("!", a),
          lambda a: (a[0], H.implies(a[0], a[1])))
    _scan(r, "(ii) ?a = (a₋→a₊, a₋)", singles, lambda a: op("?", a),
          lambda a: (H.implies(a[1], a[0]), a[1]))
    _scan(r, "(iii) a⊥ = a⊸ff", singles, lambda a: op("⊥ᴸ", a), lambda a: op("⊸", a, M.ff))
    _scan(r, "(iv) !!a = !a", singles, lambda a: op("!", op("!", a)), lambda a: op("!", a))
    _scan(r, "(v) !a = a⊗a", singles, lambda a: op("!", a), lambda a: op("⊗", a, a))
    _scan(r, "(vi) a⊕(b&c) = (a⊕b)&(a⊕c)", triples,
          lambda a, b, c: op("⊕", a, op("&", b, c)),
          lambda a, b, c: op("&", op("⊕", a, b), op("⊕", a, c)))
    xs = [(x, y) for x, y in product(H.elements, repeat=2)]
    outside = [x for x in H.elements if M.embed(x) not in M]
    _scan(r, "(vii) !e(x)⊸e(y) = e(x)⊃e(y)", xs,
          lambda x, y: op("⊸", op("!", M.embed(x)), M.embed(y)),
          lambda x, y: T.weak_imp(M.embed(x), M.embed(y)))
    if outside:
        r.checks[-1].passed = False
        r.checks[-1].witness = f"e({fmt(outside[0])}) not in carrier"

    # secondary reading of ≡ as mutual ⊸-validity
    for name, cases, lhs, rhs in (
        ("(iv)", singles, lambda a: op("!", op("!", a)), lambda a: op("!", a)),
        ("(v)", singles, lambda a: op("!", a), lambda a: op("⊗", a, a)),
        ("(vi)", triples, lambda a, b, c: op("⊕", a, op("&", b, c)),
         lambda a, b, c: op("&", op("⊕", a, b), op("⊕", a, c))),
    ):
        bad = next((c for c in cases if not _mutual_lolli(M, lhs(*c), rhs(*c))), None)
        r.add(f"{name} as mutual ⊸", bad is None,
              "holds" if bad is None else "fails at " + ", ".join(fmt(x) for x in bad), info=True)
    return r


def closure_violation(M: ChuModel):
    """First (connective, args) whose result leaves the carrier, or None."""
    for name in UNARY:
        for a in M.carrier:
            if M.apply(name, a) not in M:
                return name, (a,)
    for name in BINARY:
        for a, b in product(M.carrier, repeat=2):
            if M.apply(name, a, b) not in M:
                return name, (a, b)
    return None


def de_morgan_violation(M: ChuModel):
    """First (a, b) with a⅋b ≠ (a⊥⊗b⊥)⊥, or None."""
    op = M.apply
    for a, b in product(M.carrier, repeat=2):
        if op("⅋", a, b) != op("⊥ᴸ", op("⊗", op("⊥ᴸ", a), op("⊥ᴸ", b))):
            return a, b
    return None
