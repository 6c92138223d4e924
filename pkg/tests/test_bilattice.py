from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import distributive_family, heyting, lattice_from_sets, twist_ops
from twistlab.bilattice import (AbstractBilattice, bilattice_eval, check_residuation, four,
                                interlacing_violation, is_interlaced, logic_order_from_info,
                                residuation_counterexample, twist_construct, twist_representation)
from twistlab.chu import ChuModel
from twistlab.errors import ConnectiveUnavailable, NotABilattice
from twistlab.fixtures import bilattice_fixtures, chain, m3, square, two, two_by_three
from twistlab.iso import find_isomorphism

PAIRS = [(two(), two()), (chain(3), chain(3)), (two(), chain(3)), (square(), chain(3)),
         (chain(4), two()), (square(), square()), (m3(), two())]

distributive_lattices = (st.lists(st.frozensets(st.integers(0, 2), min_size=1), max_size=4)
                         .map(distributive_family)
                         .filter(lambda sets: len(sets) <= 5)
                         .map(lattice_from_sets))


def test_twist_of_two_is_four():
    T = twist_construct(two())
    assert find_isomorphism(four(), AbstractBilattice.from_twist(T)) is not None
    t, f, bot, top = T.tt, T.ff, T.bot, T.top
    assert T.kleq(bot, t) and T.kleq(bot, f) and T.kleq(t, top) and T.kleq(f, top)
    assert not T.kleq(t, f) and not T.kleq(f, t)
    assert T.lleq(f, bot) and T.lleq(f, top) and T.lleq(bot, t) and T.lleq(top, t)
    assert not T.lleq(bot, top) and not T.lleq(top, bot)


def test_classical_conjunction():
    T = twist_construct(two())
    assert bilattice_eval(T, "∧·", ("1", "0"), ("0", "1")) == ("0", "1")


def test_componentwise_join_in_chain():
    assert bilattice_eval(twist_construct(chain(3)), "⊔", ("1/2", "0"), ("0", "1/2")) == ("1/2", "1/2")


def test_four_negation():
    F = four()
    assert F.neg("True") == "False"
    assert F.neg("Both") == "Both" and F.neg("None") == "None"
    T = twist_construct(two())
    assert T.neg(T.tt) == T.ff and T.neg(T.top) == T.top and T.neg(T.bot) == T.bot


def test_weak_implication_from_truth():
    T, L = twist_construct(two()), two()
    for x in T.carrier:
        expected = (heyting(L, "1", x[0]), L.meet("1", x[1]))
        assert bilattice_eval(T, "⊃", T.tt, x) == expected == x


def test_double_negation_in_chain_twist():
    T = twist_construct(chain(3))
    assert all(T.neg(T.neg(x)) == x for x in T.carrier)


def test_unavailable_connectives():
    T = twist_construct(two(), chain(3))
    with pytest.raises(ConnectiveUnavailable):
        bilattice_eval(T, "¬", T.tt)
    with pytest.raises(ConnectiveUnavailable):
        bilattice_eval(twist_construct(m3()), "⊃", ("0", "0"), ("0", "0"))
    with pytest.raises(ConnectiveUnavailable):
        check_residuation(twist_construct(m3()))


@pytest.mark.parametrize("Lp,Lm", PAIRS, ids=lambda L: L.name)
def test_orders_and_operations_are_componentwise(Lp, Lm):
    T = twist_construct(Lp, Lm)
    ref = twist_ops(Lp, Lm)
    for x, y in product(T.carrier, repeat=2):
        for op in ("kmeet", "kjoin", "land", "lor", "kleq", "lleq"):
            assert getattr(T, op)(x, y) == ref[op](x, y), (op, x, y)
    for x in T.carrier:
        assert T.lleq(T.ff, x) and T.lleq(x, T.tt)
        assert T.kleq(T.bot, x) and T.kleq(x, T.top)


@pytest.mark.parametrize("L", [two(), chain(3), square(), two_by_three()], ids=lambda L: L.name)
def test_negation_is_info_iso_and_logic_antitone(L):
    T = twist_construct(L)
    for x, y in product(T.carrier, repeat=2):
        assert T.kleq(x, y) == T.kleq(T.neg(x), T.neg(y))
        assert T.lleq(x, y) == T.lleq(T.neg(y), T.neg(x))


@pytest.mark.parametrize("L", [two(), chain(3), chain(4), square()], ids=lambda L: L.name)
def test_strong_implication_matches_chu_lolli(L):
    T, M = twist_construct(L), ChuModel(L)
    imp = lambda a, b: heyting(L, a, b)
    for a, b in product(T.carrier, repeat=2):
        lolli = (L.meet(imp(a[0], b[0]), imp(b[1], a[1])), L.meet(a[0], b[1]))
        assert T.strong_imp(a, b) == lolli
    for a, b in product(M.carrier, repeat=2):
        assert M.apply("⊸", a, b) == T.strong_imp(a, b)


def test_interlacing_examples():
    assert is_interlaced(four())
    assert is_interlaced(AbstractBilattice.from_twist(twist_construct(square())))


def test_broken_meet_is_rejected():
    F = four()
    # ⊥ ⊓ t redefined to f
    broken = F.with_table("kmeet", {(F.bot, F.tt): F.ff, (F.tt, F.bot): F.ff})
    with pytest.raises(NotABilattice) as info:
        is_interlaced(broken)
    assert info.value.axiom == "BI-1"


def test_identity_negation_is_not_antitone():
    F = four()
    broken = F.with_table("neg", {F.tt: F.tt, F.ff: F.ff})
    with pytest.raises(NotABilattice) as info:
        is_interlaced(broken)
    assert info.value.axiom == "BI-3"


@pytest.mark.parametrize("B", bilattice_fixtures(), ids=lambda B: B.name)
def test_fixture_interlaced(B):
    assert interlacing_violation(B) is None


def test_representation_of_four():
    L, phi = twist_representation(four())
    assert find_isomorphism(L, two()) is not None
    top = phi["Both"]
    assert top == (L.top, L.top)
    assert phi["None"] == (L.bottom, L.bottom)


@pytest.mark.parametrize("L", [chain(3), square()], ids=lambda L: L.name)
def test_representation_recovers_component(L):
    B = AbstractBilattice.from_twist(twist_construct(L))
    Lr, phi = twist_representation(B)
    assert find_isomorphism(Lr, L) is not None
    back = AbstractBilattice.from_twist(twist_construct(Lr))
    assert find_isomorphism(B, back) is not None


def test_residuation_examples():
    assert check_residuation(twist_construct(two()))
    assert check_residuation(twist_construct(chain(3)))


def test_residuation_detects_fusion_replaced_by_meet():
    T = twist_construct(two())
    T.fusion = T.kmeet
    witness = residuation_counterexample(T)
    assert witness is not None
    x, y, z = witness
    assert T.lleq(T.kmeet(x, y), z) != T.lleq(x, T.strong_imp(y, z))


@pytest.mark.parametrize("L", [two(), chain(3), square()], ids=lambda L: L.name)
def test_logic_order_recovered_from_info_order(L):
    T = twist_construct(L)
    for x, y in product(T.carrier, repeat=2):
        assert logic_order_from_info(T, x, y) == T.lleq(x, y)


@settings(max_examples=25, deadline=None)
@given(distributive_lattices)
def test_random_distributive_twists(L):
    T = twist_construct(L)
    assert residuation_counterexample(T) is None
    B = AbstractBilattice.from_twist(T)
    Lr, _ = twist_representation(B)
    assert find_isomorphism(Lr, L) is not None
