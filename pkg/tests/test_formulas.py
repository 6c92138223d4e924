import pytest
from hypothesis import given, settings, strategies as st

from twistlab.dframe import identity_ndframe, ndframe_from_bispace
from twistlab.fixtures import bispace_fixtures, chain, ndframe_fixtures, two
from twistlab.formulas import (BOT, DOUBLE_NEG_INTRO, FF, GAMMA, PEIRCE, PHI, PSI, SCHEMAS, TOP,
                               TT, GridEvaluator, axiom_suite, equiv, evaluate, formula_counterexample,
                               kjoin, kmeet, mp_family, modus_ponens_violation, strong_imp,
                               substitute, validate_formula)

FAMILY = ndframe_fixtures()
SMALL = [identity_ndframe(two()), ndframe_from_bispace(bispace_fixtures()[2], "bispace2"),
         FAMILY[5]]  # inj(2→2x2)

formulas = st.recursive(
    st.sampled_from([PHI, PSI, GAMMA, FF, TT, BOT, TOP]),
    lambda sub: st.one_of(
        sub.map(lambda a: ~a),
        st.tuples(sub, sub).map(lambda ab: ab[0] & ab[1]),
        st.tuples(sub, sub).map(lambda ab: ab[0] | ab[1]),
        st.tuples(sub, sub).map(lambda ab: ab[0] >> ab[1]),
        st.tuples(sub, sub).map(lambda ab: kmeet(*ab)),
        st.tuples(sub, sub).map(lambda ab: kjoin(*ab)),
    ),
    max_leaves=7,
)


@settings(max_examples=40, deadline=None)
@given(formulas, st.sampled_from(range(len(SMALL))))
def test_grid_matches_scalar_evaluation(phi, k):
    N = SMALL[k]
    G = GridEvaluator(N)
    plus, minus = G.eval(phi)
    for col in range(G.size):
        expected = evaluate(N, phi, G.valuation(col))
        assert (N.plus.elements[plus[col]], N.minus.elements[minus[col]]) == expected
    scalar_valid = all(evaluate(N, phi, G.valuation(c))[0] == N.plus.top for c in range(G.size))
    assert GridEvaluator(N, sorted(phi.variables())).holds(phi).all() == scalar_valid


def test_rendering():
    assert str(PHI >> (PSI >> PHI)) == "φ⊃(ψ⊃φ)"
    assert str(~~PHI >> PHI) == "¬¬φ⊃φ"


def test_substitution():
    assert substitute(PHI >> PSI, {"phi": ~GAMMA}) == (~GAMMA >> PSI)


@pytest.mark.parametrize("N", FAMILY, ids=lambda N: N.name)
def test_first_axiom_and_double_negation_elimination(N):
    assert validate_formula(N, PHI >> (PSI >> PHI))
    assert validate_formula(N, ~~PHI >> PHI)


def test_double_negation_introduction_needs_pm_identity():
    N = ndframe_from_bispace(bispace_fixtures()[2])
    assert not N.pm_is_identity()
    cex = formula_counterexample(N, DOUBLE_NEG_INTRO)
    assert cex is not None
    x = cex["phi"]
    assert evaluate(N, DOUBLE_NEG_INTRO, cex)[0] != N.plus.top
    assert N.p(N.m(x[0])) != x[0]
    for M in FAMILY:
        if M.pm_is_identity():
            assert validate_formula(M, DOUBLE_NEG_INTRO)


def test_strong_implication_is_derived():
    N = identity_ndframe(chain(3))
    G = GridEvaluator(N, ("phi", "psi"))
    lhs = G.eval(strong_imp(PHI, PSI))
    rhs = G.eval((PHI >> PSI) & (~PSI >> ~PHI))
    assert (lhs[0] == rhs[0]).all() and (lhs[1] == rhs[1]).all()


def test_validity_over_con_is_weaker():
    N = identity_ndframe(chain(3))
    assert validate_formula(N, PEIRCE, "con") or not validate_formula(N, PEIRCE)
    for s in SCHEMAS:
        assert validate_formula(N, s.formula, "con")


def test_suite_on_two():
    r = axiom_suite(identity_ndframe(two()))
    assert r.passed, r.render()
    assert r["Peirce valid ⇔ L₊ Boolean"].witness == "Peirce valid: yes; L₊ Boolean: yes"
    assert all(c.witness == "valid" for c in r.checks if c.name.startswith("★") and c.info)


def test_suite_on_three_chain_peirce_fails():
    N = identity_ndframe(chain(3))
    r = axiom_suite(N)
    assert r.passed
    assert not validate_formula(N, PEIRCE)
    assert r["Peirce valid ⇔ L₊ Boolean"].witness == "Peirce valid: no; L₊ Boolean: no"


def test_suite_on_non_join_preserving_p():
    N = FAMILY[5]
    assert N.name == "inj(2→2x2)" and not N.p_preserves_joins()
    r = axiom_suite(N)
    assert r.passed
    assert r["★B (¬∧L) as ≡"].witness.startswith("fails at")
    converse = (~(PHI & PSI)) >> (~PHI | ~PSI)
    assert not validate_formula(N, converse)


@pytest.mark.parametrize("N", FAMILY, ids=lambda N: N.name)
def test_all_schemas_valid(N):
    for s in SCHEMAS:
        assert validate_formula(N, s.formula), s.name


def test_mp_family_shape():
    fam = mp_family()
    assert len(fam) == len(set(fam)) == 131
    for s in SCHEMAS:
        assert s.formula in fam


def test_mp_detects_unsound_rule():
    N = identity_ndframe(two())
    assert modus_ponens_violation(N) is None
    # with ⊃ read as ⊔ the rule breaks: tt ⊔ φ is valid while φ is not
    fake = [TT, kjoin(TT, PHI), PHI]
    G = GridEvaluator(N)
    assert G.holds(kjoin(TT, PHI)).all() and not G.holds(PHI).all()
    assert validate_formula(N, equiv(PHI, PHI))
    assert modus_ponens_violation(N, fake) is None
