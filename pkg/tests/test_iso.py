from itertools import permutations, product

from twistlab.bilattice import AbstractBilattice, four, twist_construct
from twistlab.fixtures import chain, m3, n5, square, two
from twistlab.iso import find_isomorphism
from twistlab.lattice import build_lattice


def brute_force_iso(A, B):
    """Try every bijection; only usable for tiny lattices."""
    if len(A) != len(B):
        return None
    for perm in permutations(B.elements):
        f = dict(zip(A.elements, perm))
        if all(A.leq(x, y) == B.leq(f[x], f[y]) for x, y in product(A.elements, repeat=2)):
            return f
    return None


def test_identity_on_two():
    assert find_isomorphism(two(), two(), ("meet", "join")) == {"0": "0", "1": "1"}


def test_chain_vs_m3_absent():
    assert find_isomorphism(chain(3), m3()) is None
    assert find_isomorphism(chain(5), m3()) is None


def test_agrees_with_brute_force():
    relabelled = build_lattice(["z", "p", "q", "r", "o"],
                               [("z", "p"), ("p", "q"), ("q", "o"), ("z", "r"), ("r", "o")], "N5'")
    cases = [(n5(), relabelled), (m3(), n5()), (square(), chain(4)), (chain(4), chain(4))]
    for A, B in cases:
        ours, brute = find_isomorphism(A, B), brute_force_iso(A, B)
        assert (ours is None) == (brute is None)
        if ours:
            assert all(A.leq(x, y) == B.leq(ours[x], ours[y])
                       for x, y in product(A.elements, repeat=2))


def test_four_is_twist_of_two():
    iso = find_isomorphism(four(), AbstractBilattice.from_twist(twist_construct(two())))
    assert iso is not None
    assert iso["Both"] == ("1", "1") and iso["None"] == ("0", "0")
    assert iso["True"] == ("1", "0") and iso["False"] == ("0", "1")


def test_signature_matters():
    T = AbstractBilattice.from_twist(twist_construct(two()))
    broken = T.with_table("neg", {("0", "0"): ("1", "1"), ("1", "1"): ("0", "0")})
    assert find_isomorphism(T, broken, ("kmeet", "kjoin")) is not None
    assert find_isomorphism(T, broken) is None
