"""Lattice variables: join-only writes, threshold reads, and an interleaving simulator."""
from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .errors import IncompatibleThresholds, InvalidInterleaving, ReservedIdentifier, UnknownElement
from .lattice import FiniteLattice, build_lattice
from .report import Report

RESERVED = {"⊥", "⊤", "bot", "top"}


class _Signal:
    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return self.name

    __str__ = __repr__


PENDING = _Signal("Pending")
CONFLICT = _Signal("Conflict")
STUCK = _Signal("Stuck")


@dataclass(frozen=True)
class JoinSemilattice:
    elements: tuple
    join_table: dict = field(repr=False)
    bottom: str = "⊥"
    top: str = "⊤"
    name: str = "S"

    @classmethod
    def from_lattice(cls, L: FiniteLattice) -> "JoinSemilattice":
        table = {(a, b): L.join(a, b) for a, b in product(L.elements, repeat=2)}
        return cls(tuple(L.elements), table, L.bottom, L.top, L.name)

    def join(self, a, b):
        try:
            return self.join_table[(a, b)]
        except KeyError:
            bad = a if a not in self.elements else b
            raise UnknownElement(bad, self.name) from None

    def leq(self, a, b) -> bool:
        return self.join(a, b) == b

    def law_violation(self):
        """The first failing semilattice law with its witness, or None."""
        E, j = self.elements, self.join
        for a in E:
            if j(a, a) != a:
                return "idempotence", (a,)
            if j(self.bottom, a) != a:
                return "bottom neutral", (a,)
            if j(self.top, a) != self.top:
                return "top absorbing", (a,)
        for a, b in product(E, repeat=2):
            if j(a, b) != j(b, a):
                return "commutativity", (a, b)
        for a, b, c in product(E, repeat=3):
            if j(j(a, b), c) != j(a, j(b, c)):
                return "associativity", (a, b, c)
        return None


def freely_add_order(values) -> JoinSemilattice:
    """⊥ below every value, ⊤ above; distinct values join to ⊤."""
    values = [str(v) for v in values]
    if not values:
        raise ValueError("need at least one value")
    clash = RESERVED & set(values)
    if clash:
        raise ReservedIdentifier(f"{sorted(clash)[0]!r} is reserved")
    elements = ["⊥", *values, "⊤"]
    pairs = [("⊥", v) for v in values] + [(v, "⊤") for v in values]
    return JoinSemilattice.from_lattice(build_lattice(elements, pairs, "free(" + ",".join(values) + ")"))


# -- the store -----------------------------------------------------------------

@dataclass(frozen=True)
class LVarStore:
    lattice: JoinSemilattice
    current: str = None
    conflicted: bool = False

    def __post_init__(self):
        if self.current is None:
            object.__setattr__(self, "current", self.lattice.bottom)


def new_store(S: JoinSemilattice) -> LVarStore:
    return LVarStore(S, S.bottom)


def put(store: LVarStore, v) -> tuple[LVarStore, bool]:
    """Join v into the store; the flag reports a (possibly repeated) conflict."""
    S = store.lattice
    if v not in S.elements:
        raise UnknownElement(v, S.name)
    value = S.join(store.current, v)
    conflict = value == S.top
    return LVarStore(S, value, store.conflicted or conflict), conflict


def check_thresholds(S: JoinSemilattice, thresholds) -> tuple:
    ts = tuple(thresholds)
    for t in ts:
        if t not in S.elements:
            raise UnknownElement(t, S.name)
    for i, a in enumerate(ts):
        for b in ts[i + 1:]:
            if a == b or S.join(a, b) != S.top:
                raise IncompatibleThresholds(f"{a} ⊔ {b} ≠ {S.top}")
    return ts


def get(store: LVarStore, thresholds):
    S = store.lattice
    ts = check_thresholds(S, thresholds)
    if store.current == S.top:
        return CONFLICT
    hits = [t for t in ts if S.leq(t, store.current)]
    if not hits:
        return PENDING
    assert len(hits) == 1, "incompatible thresholds cannot both be reached below ⊤"
    return hits[0]


# -- schedules and simulation --------------------------------------------------

@dataclass(frozen=True)
class Put:
    value: str

    def __str__(self):
        return f"put {self.value}"


@dataclass(frozen=True)
class Get:
    thresholds: tuple

    def __str__(self):
        return "get " + ",".join(self.thresholds)


@dataclass(frozen=True)
class Schedule:
    lattice: JoinSemilattice
    threads: tuple
    name: str = "schedule"

    def __post_init__(self):
        threads = tuple(tuple(ops) for ops in self.threads)
        object.__setattr__(self, "threads", threads)
        for ops in threads:
            for op in ops:
                if isinstance(op, Put):
                    if op.value not in self.lattice.elements:
                        raise UnknownElement(op.value, self.lattice.name)
                elif isinstance(op, Get):
                    check_thresholds(self.lattice, op.thresholds)
                else:
                    raise TypeError(f"unknown operation {op!r}")

    @property
    def size(self) -> int:
        return sum(len(ops) for ops in self.threads)


@dataclass
class Trace:
    interleaving: tuple
    history: list            # store values after each state change, starting at ⊥
    gets: dict               # (thread, op index) -> threshold, CONFLICT or STUCK
    final: str
    conflict: bool

    @property
    def stuck(self) -> list:
        return [k for k, v in self.gets.items() if v is STUCK]

    def observation(self):
        """What must not depend on the interleaving."""
        if self.conflict:
            # once a put reaches ⊤ the run is an error; reads are not compared
            return (self.final, True, None)
        return (self.final, False, tuple(sorted((k, str(v)) for k, v in self.gets.items())))


def simulate(schedule: Schedule, interleaving) -> Trace:
    """Run one interleaving; a blocked get keeps its turn and is retried on every change."""
    interleaving = tuple(interleaving)
    n = len(schedule.threads)
    counts = Counter(interleaving)
    if any(not (isinstance(i, int) and 0 <= i < n) for i in interleaving) or \
            any(counts[i] != len(ops) for i, ops in enumerate(schedule.threads)):
        raise InvalidInterleaving(f"{interleaving} is not a shuffle of the thread lengths")

    store = new_store(schedule.lattice)
    history = [store.current]
    gets = {}
    pc = [0] * n
    credit = [0] * n

    def run(i) -> bool:
        nonlocal store
        changed = False
        ops = schedule.threads[i]
        while credit[i] and pc[i] < len(ops):
            op = ops[pc[i]]
            if isinstance(op, Put):
                before = store.current
                store, _ = put(store, op.value)
                if store.current != before:
                    history.append(store.current)
                    changed = True
            else:
                got = get(store, op.thresholds)
                if got is PENDING:
                    break
                gets[(i, pc[i])] = got
            pc[i] += 1
            credit[i] -= 1
        return changed

    def settle():
        while any(run(j) for j in range(n) if credit[j]):
            pass

    for i in interleaving:
        credit[i] += 1
        if run(i):
            settle()
    settle()
    for i, ops in enumerate(schedule.threads):
        for k in range(pc[i], len(ops)):
            if isinstance(ops[k], Get):
                gets[(i, k)] = STUCK
    return Trace(interleaving, history, gets, store.current, store.conflicted)


def interleavings(schedule: Schedule):
    """All distinct shuffles of the thread indices, in lexicographic order."""
    remaining = [len(ops) for ops in schedule.threads]
    total = sum(remaining)
    prefix = []

    def rec():
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for i, left in enumerate(remaining):
            if left:
                remaining[i] -= 1
                prefix.append(i)
                yield from rec()
                prefix.pop()
                remaining[i] += 1

    yield from rec()


def determinism_check(schedule: Schedule, limit: int = 5000) -> Report:
    r = Report(f"determinism {schedule.name}")
    S = schedule.lattice
    if schedule.size > 10:
        r.add("at most 10 operations", False, f"{schedule.size} operations")
        return r
    traces = []
    for k, order in enumerate(interleavings(schedule)):
        if k >= limit:
            r.add(f"at most {limit} interleavings", False, "enumeration truncated")
            break
        traces.append(simulate(schedule, order))
    first = traces[0]
    diverging = next((t for t in traces if t.observation() != first.observation()), None)
    witness = ""
    if diverging is not None:
        witness = (f"{_show_order(first)} → {_show_obs(first)} but "
                   f"{_show_order(diverging)} → {_show_obs(diverging)}")
    r.add(f"{len(traces)} interleavings agree", diverging is None, witness)
    bad = next((t for t in traces
                if any(not S.leq(a, b) for a, b in zip(t.history, t.history[1:]))), None)
    r.add("store values form a ⊑-chain", bad is None, _show_order(bad) if bad else "")
    again = simulate(schedule, first.interleaving)
    r.add("replay is identical", again == first, "")
    r.add("outcome", True, _show_obs(first), info=True)
    return r


def show_trace(t: Trace) -> str:
    return f"{_show_order(t)}  {_show_obs(t)}"


def round_robin(schedule: Schedule) -> tuple:
    left = [len(ops) for ops in schedule.threads]
    order = []
    while any(left):
        for i, k in enumerate(left):
            if k:
                order.append(i)
                left[i] -= 1
    return tuple(order)


def _show_order(t: Trace) -> str:
    return "".join(str(i) for i in t.interleaving)


def _show_obs(t: Trace) -> str:
    parts = [f"final {t.final}"]
    if t.conflict:
        parts.append("conflict")
    gets = ", ".join(f"t{i}#{k}={v}" for (i, k), v in sorted(t.gets.items()))
    if gets:
        parts.append(f"gets {gets}")
    return "; ".join(parts)


# -- a thread-safe variable for real concurrent callers ------------------------

class LVar:
    """put is an atomic read-join-write; get blocks until a threshold is reached."""

    def __init__(self, lattice: JoinSemilattice):
        self.lattice = lattice
        self._value = lattice.bottom
        self._cond = threading.Condition()

    @property
    def value(self):
        with self._cond:
            return self._value

    def put(self, v) -> bool:
        """Returns True when this write produced or hit a conflict."""
        if v not in self.lattice.elements:
            raise UnknownElement(v, self.lattice.name)
        with self._cond:
            self._value = self.lattice.join(self._value, v)
            self._cond.notify_all()
            return self._value == self.lattice.top

    def get(self, thresholds, timeout: float | None = None):
        ts = check_thresholds(self.lattice, thresholds)
        with self._cond:
            result = PENDING

            def ready():
                nonlocal result
                result = get(LVarStore(self.lattice, self._value), ts)
                return result is not PENDING

            self._cond.wait_for(ready, timeout)
            return result
