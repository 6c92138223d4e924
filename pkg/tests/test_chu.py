from itertools import product

import pytest

from oracles import heyting
from twistlab.chu import (BINARY, UNARY, chu_carrier, chu_eval, chu_table,
                          closure_violation, de_morgan_violation, verify_chu_identities,
                          verify_term_definability)
from twistlab.errors import NotHeyting, NotInCarrier
from twistlab.fixtures import chain, heyting_fixtures, m3, square, two

FIXTURES = heyting_fixtures()


def test_carrier_of_two():
    assert set(chu_carrier(two()).carrier) == {("0", "0"), ("1", "0"), ("0", "1")}


def test_carrier_of_three_chain():
    M = chu_carrier(chain(3))
    assert set(M.carrier) == {("0", "0"), ("1/2", "0"), ("1", "0"), ("0", "1/2"), ("0", "1")}


def test_carrier_of_square_is_filtered_by_meet():
    H = square()
    M = chu_carrier(H)
    expected = {(a, b) for a, b in product(H.elements, repeat=2) if H.meet(a, b) == "00"}
    assert set(M.carrier) == expected
    assert ("11", "11") not in M and ("10", "11") not in M and ("10", "01") in M


def test_non_heyting_rejected():
    with pytest.raises(NotHeyting):
        chu_carrier(m3())


def test_tensor_of_true_and_false():
    M = chu_carrier(two())
    assert chu_eval(M, "⊗", M.tt, M.ff) == M.ff


def test_perp_is_involutive():
    for H in FIXTURES:
        M = chu_carrier(H)
        assert all(chu_eval(M, "⊥ᴸ", chu_eval(M, "⊥ᴸ", a)) == a for a in M.carrier)


def test_bang_and_embedding_in_three_chain():
    M = chu_carrier(chain(3))
    assert chu_eval(M, "!", ("1/2", "0")) == ("1/2", "0")
    assert M.embed("1/2") == ("1/2", heyting(chain(3), "1/2", "0")) == ("1/2", "0")


def test_outside_carrier_rejected():
    M = chu_carrier(two())
    with pytest.raises(NotInCarrier):
        chu_eval(M, "⊗", ("1", "1"), M.tt)


def test_connectives_match_formulas_written_out():
    for H in (two(), chain(3), square()):
        M = chu_carrier(H)
        i = lambda a, b: heyting(H, a, b)
        m, j = H.meet, H.join
        ref = {
            "⊕": lambda a, b: (m(a[0], b[0]), j(a[1], b[1])),
            "&": lambda a, b: (j(a[0], b[0]), m(a[1], b[1])),
            "⊗": lambda a, b: (m(a[0], b[0]), m(i(a[0], b[1]), i(b[0], a[1]))),
            "⅋": lambda a, b: (m(i(a[1], b[0]), i(b[1], a[0])), m(a[1], b[1])),
            "⊸": lambda a, b: (m(i(a[0], b[0]), i(b[1], a[1])), m(a[0], b[1])),
        }
        for name, f in ref.items():
            for a, b in product(M.carrier, repeat=2):
                assert chu_eval(M, name, a, b) == f(a, b), (name, a, b)
        for a in M.carrier:
            assert chu_eval(M, "!", a) == (a[0], i(a[0], H.bottom))
            assert chu_eval(M, "?", a) == (i(a[1], H.bottom), a[1])


@pytest.mark.parametrize("H", FIXTURES, ids=lambda H: H.name)
def test_term_definability(H):
    r = verify_term_definability(chu_carrier(H))
    assert r.passed, r.render()
    graded = [c for c in r.checks if not c.info]
    assert len(graded) == 8
    n = len(chu_carrier(H).carrier)
    assert f"a⊕b = a∧·b ({n * n} cases)" in r


def test_pair_counts_for_small_models():
    assert "a⊗b = ¬(a⇒¬b) (9 cases)" in verify_term_definability(chu_carrier(two()))
    assert "a⊗b = ¬(a⇒¬b) (25 cases)" in verify_term_definability(chu_carrier(chain(3)))


@pytest.mark.parametrize("H", FIXTURES, ids=lambda H: H.name)
def test_side_identities(H):
    r = verify_chu_identities(chu_carrier(H))
    assert r.passed, r.render()
    assert len([c for c in r.checks if not c.info]) == 7
    assert all(c.passed for c in r.checks if c.info)


@pytest.mark.parametrize("H", FIXTURES, ids=lambda H: H.name)
def test_closure_and_de_morgan(H):
    M = chu_carrier(H)
    assert closure_violation(M) is None
    assert de_morgan_violation(M) is None


def test_table_order_follows_carrier():
    M = chu_carrier(two())
    rows = chu_table(M, "tensor")
    assert [r[:2] for r in rows] == list(product(M.carrier, repeat=2))
    assert len(chu_table(M, "!")) == 3


def test_tensor_replaced_by_plus_is_detected():
    M = chu_carrier(two())
    bad = M.mutated("⊗", lambda a, b: M.apply("⊕", a, b))
    r = verify_term_definability(bad)
    check = next(c for c in r.checks if c.name.startswith("a⊗b = ¬(a⇒¬b)"))
    assert not check.passed
    # ⊕ and ⊗ agree at (t, f) in Chu(2,0); the first real disagreement is reported
    assert M.apply("⊕", M.tt, M.ff) == M.apply("⊗", M.tt, M.ff)
    assert check.witness.startswith("at (0,0), (0,0)")


def test_every_connective_listed():
    M = chu_carrier(chain(3))
    for name in BINARY:
        assert len(chu_table(M, name)) == len(M.carrier) ** 2
    for name in UNARY:
        assert len(chu_table(M, name)) == len(M.carrier)
