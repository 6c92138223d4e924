"""Regenerate the structure files under fixtures/ from library constructions."""
from pathlib import Path

from twistlab.dframe import (BitopSpace, canonical_relations, identity_ndframe,
                             ndframe_from_bispace, ndframe_from_injection)
from twistlab.fixtures import chain, m3, n5, square, two, two_by_three
from twistlab.lattice import LatticeMap
from twistlab.structfile import dump_dframe, dump_lattice

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def write(name, text):
    (OUT / name).write_text(text, encoding="utf-8")


def main():
    OUT.mkdir(exist_ok=True)
    write("two.lat", dump_lattice(two()))
    write("m3.lat", dump_lattice(m3()))
    write("n5.lat", dump_lattice(n5()))
    write("four.lat", "# information order of the four truth values\n"
                      "lattice four\nelements ⊥ f t ⊤\nle ⊥ f\nle ⊥ t\nle f ⊤\nle t ⊤\n")
    write("heyting.lat", "\n".join(dump_lattice(L) for L in
                                   (chain(2), chain(3), chain(4), chain(5), square(), two_by_three())))

    write("twist2.nd", dump_dframe(identity_ndframe(two(), "twist2")))
    write("twist3.nd", dump_dframe(identity_ndframe(chain(3), "twist3")))
    sq = square()
    inj_c3 = ndframe_from_injection(LatticeMap(two(), chain(3), {"0": "0", "1": "1"}), "inj2C3")
    inj_sq = ndframe_from_injection(LatticeMap(two(), sq, {"0": "00", "1": "11"}), "inj2sq")
    X = BitopSpace(("x", "y"), [set(), {"x"}, {"x", "y"}], [set(), {"y"}, {"x", "y"}])
    families = [identity_ndframe(two(), "twist2"), identity_ndframe(chain(3), "twist3"),
                inj_c3, inj_sq, ndframe_from_bispace(X, "sierpinski")]
    write("family.nd", "\n".join(dump_dframe(N) for N in families))

    D = canonical_relations(two(), kind="twist", name="broken")
    write("broken.df", "# twist relations over 2 with ff = (0,1) dropped from con\n"
          + dump_dframe(type(D)(D.plus, D.minus, D.con - {D.ff}, D.tot, "broken")))
    write("trivial.df", dump_dframe(canonical_relations(chain(3), kind="trivial", name="trivial3")))

    write("conflict.sched", "lattice free 3 5\nthread: put 3\nthread: put 5\n")
    write("retry.sched", "lattice free 3 5\nthread: get 3,5\nthread: put 3\n")
    write("stuck.sched", "lattice free 3 5\nthread: put 3; get 5\nthread: put 3\n")
    write("mixed.sched", "# three threads, 8 operations, 560 interleavings\n"
          "lattice C5\nelements 0 1/4 1/2 3/4 1\nle 0 1/4\nle 1/4 1/2\nle 1/2 3/4\nle 3/4 1\n"
          "schedule climb C5\n"
          "thread: put 1/4; get 1/2; put 3/4\n"
          "thread: put 1/2; get 1/4\n"
          "thread: get 3/4; put 1/4; put 1/2\n")

    write("casts.terms", "carrier int 0 1 2 3\ncarrier bool tt ff\n"
          "term ok (cast {int: 0,1} int p (val 1))\n"
          "term out (cast {int: 0,1} int p (val 2))\n"
          "term roundtrip (cast int dyn q (cast dyn int p (val 3)))\n"
          "term wrongtag (cast bool dyn q (cast dyn int p (val 3)))\n"
          "term neg (app (cast (int -> int) ({int: 0} -> int) p (fun {int: 0} int (0 (val 0))))\n"
          "              (val 2))\n"
          "term narrowing (app (cast (int -> {int: 0}) (int -> int) p\n"
          "                (fun int int (0 (val 0)) (1 (val 1)) (2 (val 2)) (3 (val 3))))\n"
          "           (val 3))\n")


if __name__ == "__main__":
    main()
