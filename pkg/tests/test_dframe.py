from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import distributive_family
from twistlab.dframe import (BitopSpace, DFrame, NdFrame, canonical_relations, check_dframe,
                             check_ndframe, dframe_from_bispace, factor_homomorphism,
                             identity_ndframe, injection_from_ndframe, ndframe_from_bispace,
                             ndframe_from_injection, right_adjoint)
from twistlab.errors import (NotAHomomorphism, NotATopology, NotInjective, NotPMId,
                             TwistNeedsSymmetric)
from twistlab.fixtures import (bispace_fixtures, chain, dframe_fixtures, injection_fixtures,
                               ndframe_fixtures, square, two)
from twistlab.lattice import LatticeMap, identity_map

POINTS = ("x", "y", "z")

topologies = (st.lists(st.frozensets(st.sampled_from(POINTS)), max_size=4)
              .map(lambda fam: distributive_family(fam + [frozenset(POINTS)])))
bispaces = st.builds(lambda a, b: BitopSpace(POINTS, a, b), topologies, topologies)


def opens(X, D, attr):
    """Map lattice element names back to open sets."""
    return {X.open_name(U): U for U in getattr(X, attr)}


def failing(report):
    return [c.name for c in report.failures]


def test_one_point_space():
    X = BitopSpace(("x",), [set(), {"x"}], [set(), {"x"}])
    D = dframe_from_bispace(X)
    assert D.con == {("{}", "{}"), ("{}", "{x}"), ("{x}", "{}")}
    assert D.tot == {("{x}", "{x}"), ("{x}", "{}"), ("{}", "{x}")}


def test_empty_space():
    D = dframe_from_bispace(BitopSpace((), [set()], [set()]))
    assert len(D.plus) == len(D.minus) == 1
    assert D.con == D.tot == set(D.pairs())
    assert check_dframe(D).passed


def test_two_point_space():
    D = dframe_from_bispace(bispace_fixtures()[2])
    assert ("{x}", "{y}") in D.con and ("{x}", "{y}") in D.tot


def test_topology_validation():
    with pytest.raises(NotATopology):
        BitopSpace(("x", "y"), [set(), {"x"}, {"y"}], [set(), {"x", "y"}])
    with pytest.raises(NotATopology):
        BitopSpace(("x",), [{"x"}], [set(), {"x"}])


@settings(max_examples=60, deadline=None)
@given(bispaces)
def test_bispace_frames_are_dframes(X):
    D = dframe_from_bispace(X)
    assert check_dframe(D).passed
    # disjoint U, V and covering W, V force U ⊆ W
    P, M = opens(X, D, "tau_plus"), opens(X, D, "tau_minus")
    full = frozenset(X.points)
    for (u, v), (w, v2) in product(D.con, D.tot):
        if v == v2:
            assert not P[u] & M[v] and (P[w] | M[v]) == full
            assert P[u] <= P[w]
    N = ndframe_from_bispace(X)
    assert check_ndframe(N).passed


@pytest.mark.parametrize("D", dframe_fixtures(), ids=lambda D: D.name)
def test_fixture_dframes_pass(D):
    assert check_dframe(D).passed


def test_canonical_relations_examples():
    D = canonical_relations(two(), kind="twist")
    assert D.con == {("0", "0"), ("0", "1"), ("1", "0")}
    T = canonical_relations(chain(3), kind="trivial")
    assert len(T.con) == 5
    assert T.con == {(a, b) for a, b in T.pairs() if a == "0" or b == "0"}
    S = canonical_relations(square(), kind="twist")
    for x in square().elements:
        (c,) = square().complements(x)
        assert (x, c) in S.con
    with pytest.raises(TwistNeedsSymmetric):
        canonical_relations(two(), chain(3), kind="twist")


def test_trivial_relations_asymmetric():
    assert check_dframe(canonical_relations(two(), chain(3), kind="trivial")).passed


def test_missing_false_constant_fails_axiom_one():
    D = canonical_relations(two(), kind="twist")
    broken = DFrame(D.plus, D.minus, D.con - {D.ff}, D.tot, "broken")
    assert failing(check_dframe(broken)) == ["axiom 1: con contains f"]


def test_broken_downward_closure():
    D = canonical_relations(chain(3), kind="twist")
    broken = DFrame(D.plus, D.minus, D.con - {("0", "0")}, D.tot)
    assert "axiom 2: con ⊑-downward closed" in failing(check_dframe(broken))


def test_identity_twist_is_ndframe():
    assert check_ndframe(identity_ndframe(two())).passed


def test_constant_p_breaks_axiom_three():
    C3 = chain(3)
    N = identity_ndframe(C3)
    const = LatticeMap(C3, C3, {x: "1" for x in C3.elements})
    bad = NdFrame(N.base, const, N.m, "const-p")
    assert "axiom 3: p(0) = 0" in failing(check_ndframe(bad))


@pytest.mark.parametrize("N", ndframe_fixtures(), ids=lambda N: N.name)
def test_fixture_ndframes_pass(N):
    assert check_dframe(N.base).passed
    assert check_ndframe(N).passed


def test_injection_identity_gives_twist_relations():
    N = ndframe_from_injection(identity_map(two()))
    D = canonical_relations(two(), kind="twist")
    assert N.con == D.con and N.tot == D.tot


def test_injection_into_chain():
    N = ndframe_from_injection(injection_fixtures()[0])
    assert N.p("1/2") == "0"
    below = [a for a in ("0", "1") if chain(3).leq(N.m(a), "1/2")]
    assert N.p("1/2") == max(below)


def test_injection_into_square():
    N = ndframe_from_injection(injection_fixtures()[1])
    assert [b for b in square().elements if ("1", b) in N.con] == ["00"]
    assert ("1", "10") not in N.con


def test_injection_errors():
    C3 = chain(3)
    with pytest.raises(NotInjective):
        ndframe_from_injection(LatticeMap(C3, two(), {"0": "0", "1/2": "1", "1": "1"}))
    with pytest.raises(NotAHomomorphism):
        ndframe_from_injection(LatticeMap(two(), C3, {"0": "0", "1": "1/2"}))


@pytest.mark.parametrize("m", injection_fixtures(), ids=lambda m: f"{m.source.name}-{m.target.name}")
def test_right_adjoint_is_galois(m):
    p = right_adjoint(m)
    for a, b in product(m.source.elements, m.target.elements):
        assert m.target.leq(m(a), b) == m.source.leq(a, p(b))


@pytest.mark.parametrize("m", injection_fixtures(), ids=lambda m: f"{m.source.name}-{m.target.name}")
def test_injection_round_trip(m):
    N = ndframe_from_injection(m)
    assert N.pm_is_identity()
    assert injection_from_ndframe(N) == m
    again = ndframe_from_injection(injection_from_ndframe(N))
    assert (again.con, again.tot, again.p, again.m) == (N.con, N.tot, N.p, N.m)


@pytest.mark.parametrize("N", [N for N in ndframe_fixtures() if N.pm_is_identity()],
                         ids=lambda N: N.name)
def test_ndframe_round_trip_literal(N):
    again = ndframe_from_injection(injection_from_ndframe(N))
    assert again.con == N.con and again.tot == N.tot and again.p == N.p


def test_pm_gate():
    N = ndframe_from_bispace(bispace_fixtures()[2])
    assert not N.pm_is_identity()
    with pytest.raises(NotPMId):
        injection_from_ndframe(N)


def test_factor_collapsing_chain():
    h = LatticeMap(chain(3), two(), {"0": "0", "1/2": "1", "1": "1"})
    surj, inj = factor_homomorphism(h)
    assert surj.table == h.table
    assert inj.table == {"0": "0", "1": "1"}
    assert inj.compose(surj) == h


def test_factor_injective_map():
    m = injection_fixtures()[0]
    surj, inj = factor_homomorphism(m)
    assert surj.is_injective() and surj.is_surjective()
    assert inj.compose(surj) == m


def test_factor_square_onto_two():
    sq = square()
    h = LatticeMap(sq, sq, {x: ("11" if x == "11" else "00") for x in sq.elements})
    with pytest.raises(NotAHomomorphism):
        factor_homomorphism(h)  # not join-preserving: 01 ∨ 10 = 11
    proj = LatticeMap(sq, sq, {x: x[0] * 2 for x in sq.elements})
    surj, inj = factor_homomorphism(proj)
    assert len(surj.target) == 2 and inj.compose(surj) == proj
