from itertools import product

import pytest

from oracles import dframes_isomorphic
from twistlab.dframe import DFrame, canonical_relations, identity_ndframe
from twistlab.fixtures import chain, dframe_fixtures, ndframe_fixtures, two
from twistlab.partial import (dframe_from_partial, partial_frame, partial_roundtrip, prec_suite,
                              shulman_lhd)

BOT, T, F = ("0", "0"), ("1", "0"), ("0", "1")


def test_twist_over_two():
    P = partial_frame(canonical_relations(two(), kind="twist"))
    assert set(P.elements) == {BOT, T, F}
    assert P.precedes(F, F) and P.precedes(T, T)
    assert not P.precedes(BOT, BOT)
    assert P.precedes(BOT, T)
    assert (P.bot, P.tt, P.ff) == (BOT, T, F)


def test_trivial_relations_prec():
    L = chain(3)
    D = canonical_relations(L, kind="trivial")
    P = partial_frame(D)
    for x, y in product(P.elements, repeat=2):
        assert P.precedes(x, y) == (y[0] == "1" or x[1] == "1")


def test_rebuilt_frame_uses_intervals():
    D = canonical_relations(chain(3), kind="twist")
    E = dframe_from_partial(partial_frame(D))
    assert len(E.plus.elements) == len(E.minus.elements) == 3
    assert len(E.con) == len(D.con) and len(E.tot) == len(D.tot)


@pytest.mark.parametrize("D", dframe_fixtures(), ids=lambda D: D.name)
def test_roundtrip_is_an_isomorphism(D):
    iso = partial_roundtrip(D)
    assert iso is not None
    E = dframe_from_partial(partial_frame(D))
    assert dframes_isomorphic(D, E)


def test_roundtrip_detects_different_tot():
    D = canonical_relations(chain(3), kind="twist")
    E = dframe_from_partial(partial_frame(D))
    fewer = DFrame(E.plus, E.minus, E.con, set(E.tot) - {next(iter(E.tot))})
    assert not dframes_isomorphic(D, fewer)


@pytest.mark.parametrize("N", ndframe_fixtures(), ids=lambda N: N.name)
def test_prec_rules(N):
    r = prec_suite(N)
    assert r.passed, r.render()


def test_prec_suite_counts_pairs():
    r = prec_suite(identity_ndframe(two()))
    names = [c.name for c in r.checks]
    assert "x ≺ y ⇒ x⊃y valid (5 pairs)" in names


def test_lhd():
    H = two()
    assert shulman_lhd(H, F, T)
    assert not shulman_lhd(H, T, F)
    assert shulman_lhd(H, BOT, BOT)
