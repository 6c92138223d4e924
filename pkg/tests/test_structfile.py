import pytest

from conftest import FIXTURES
from oracles import order_isos
from twistlab.bilattice import four
from twistlab.dframe import check_dframe, check_ndframe, identity_ndframe
from twistlab.errors import ParseError, UnresolvedReference
from twistlab.fixtures import chain, dframe_fixtures, ndframe_fixtures, square
from twistlab.lattice import build_lattice
from twistlab.lvars import Put, determinism_check
from twistlab.structfile import (dump_dframe, dump_lattice, load, parse_structure_file,
                                 read_structure_file, render_structure_file)

ALL = sorted(FIXTURES.glob("*.*"))


@pytest.mark.parametrize("path", ALL, ids=lambda p: p.name)
def test_render_then_parse_is_stable(path):
    sf = read_structure_file(path)
    again = parse_structure_file(render_structure_file(sf))
    assert again == sf
    assert render_structure_file(again) == render_structure_file(sf)


def test_four_is_the_info_lattice():
    L = load(read_structure_file(FIXTURES / "four.lat")).lattices["four"]
    B = four()
    info = build_lattice(B.carrier, [(x, y) for x in B.carrier for y in B.carrier
                                     if x != y and B.kleq(x, y)], "info")
    assert next(order_isos(L, info), None) is not None


def test_dump_and_load_lattice():
    for L in (chain(4), square()):
        back = load(parse_structure_file(dump_lattice(L))).lattices[L.name]
        assert back == L


@pytest.mark.parametrize("D", dframe_fixtures() + ndframe_fixtures(), ids=lambda D: D.name)
def test_dump_and_load_frames(D):
    back = load(parse_structure_file(dump_dframe(D, "x"))).dframes["x"]
    assert back.plus == D.plus and back.minus == D.minus
    assert back.con == D.con and back.tot == D.tot
    if hasattr(D, "p"):
        assert all(back.p(b) == D.p(b) for b in D.minus.elements)
        assert all(back.m(a) == D.m(a) for a in D.plus.elements)


def test_twist2_file_matches_construction():
    N = load(read_structure_file(FIXTURES / "twist2.nd")).dframes["twist2"]
    M = identity_ndframe(chain(2))
    assert (N.con, N.tot) == (M.con, M.tot)
    assert check_ndframe(N).passed


def test_broken_file():
    D = load(read_structure_file(FIXTURES / "broken.df")).dframes["broken"]
    assert not check_dframe(D).passed


def test_free_lattice_schedule():
    s = load(read_structure_file(FIXTURES / "conflict.sched")).schedules["schedule"]
    assert s.threads == ((Put("3"),), (Put("5"),))
    assert determinism_check(s).passed


@pytest.mark.parametrize("text,line", [
    ("lattice A\nelements 0 1\nle 0\n", 3),
    ("lattice A\nelements 0 1\nlattice A\nelements 0\n", 3),
    ("elements 0 1\n", 1),
    ("lattice A\nelements 0 1\ncon 0 0\n", 3),
    ("lattice A\n\n# no elements\nle 0 1\n", 1),
    ("carrier int 1\nthread: put 1\n", 2),
    ("lattice A\nelements 0 1\nthread: put 1\n", 1),
    ("term t (val 1\n", 1),
    ("lattice free 1\nthread put 1\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_structure_file(text)
    assert exc.value.line == line


def test_unresolved_reference():
    with pytest.raises(UnresolvedReference):
        parse_structure_file("lattice A\nelements 0\n\ndframe D A B\n")


def test_multiline_terms():
    sf = read_structure_file(FIXTURES / "casts.terms")
    loaded = load(sf)
    assert "\n" not in loaded.terms["neg"]
    assert loaded.terms["neg"].endswith("(val 2))")
    assert [c.name for c in loaded.carriers] == ["int", "bool"]


def test_bad_operation():
    with pytest.raises(ParseError):
        load(parse_structure_file("lattice free 1 2\nthread: put 1; fetch 2\n"))
