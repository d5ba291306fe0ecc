"""Formula parsing, Kripke evaluation, canonical models."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bitopdual.errors import (
    FormulaSyntaxError,
    UnboundVariable,
    UnknownTruthConstant,
)
from bitopdual.lattice import chain, diamond, t_op
from bitopdual.logic import (
    And,
    Box,
    CanonicalModel,
    Const0,
    Const1,
    Imp,
    KripkeModel,
    Or,
    T,
    Var,
    canonical_model,
    check_truth_lemma,
    evaluate,
    formula_variables,
    parse_formula,
    pretty_print,
)
from bitopdual.mvalgebra import MVAlgebra, box_from_frame, powerset_algebra, self_algebra


# -- parser ------------------------------------------------------------------


def test_parse_box_conjunction():
    assert parse_formula("[]( p & q )") == Box(And(Var("p"), Var("q")))


def test_parse_level_and_implication():
    assert parse_formula("T{2} p -> q") == Imp(T(2, Var("p")), Var("q"))


def test_implication_is_right_associative():
    assert parse_formula("p -> q -> r") == Imp(Var("p"), Imp(Var("q"), Var("r")))


def test_precedence_unary_and_or():
    assert parse_formula("[]p & q | r") == Or(And(Box(Var("p")), Var("q")), Var("r"))
    assert parse_formula("0 | 1 -> p") == Imp(Or(Const0(), Const1()), Var("p"))


def test_parens_override():
    assert parse_formula("[](p | q)") == Box(Or(Var("p"), Var("q")))
    assert parse_formula("p & (q -> r)") == And(Var("p"), Imp(Var("q"), Var("r")))


def test_identifier_starting_with_T_is_a_variable():
    assert parse_formula("Tp & T_x") == And(Var("Tp"), Var("T_x"))


def test_syntax_error_carries_position():
    with pytest.raises(FormulaSyntaxError) as err:
        parse_formula("p & ")
    assert err.value.position == 4
    with pytest.raises(FormulaSyntaxError):
        parse_formula("(p")
    with pytest.raises(FormulaSyntaxError):
        parse_formula("p q")
    with pytest.raises(FormulaSyntaxError):
        parse_formula("T{} p")


def test_unknown_truth_constant_at_parse_time():
    with pytest.raises(UnknownTruthConstant):
        parse_formula("T{7} p", levels=4)
    assert parse_formula("T{3} p", levels=4) == T(3, Var("p"))


def formulas(depth=4):
    leaves = st.one_of(
        st.sampled_from([Const0(), Const1()]),
        st.sampled_from(["p", "q", "r_2", "Tvar"]).map(Var),
    )

    def extend(children):
        return st.one_of(
            st.tuples(children, children).map(lambda lr: And(*lr)),
            st.tuples(children, children).map(lambda lr: Or(*lr)),
            st.tuples(children, children).map(lambda lr: Imp(*lr)),
            st.tuples(st.integers(min_value=0, max_value=3), children).map(
                lambda kv: T(kv[0], kv[1])
            ),
            children.map(Box),
        )

    return st.recursive(leaves, extend, max_leaves=12)


@settings(max_examples=200, deadline=None)
@given(formulas())
def test_pretty_print_round_trip(formula):
    assert parse_formula(pretty_print(formula)) == formula


# -- evaluation -----------------------------------------------------------------


def diamond_model():
    # two worlds x=0, y=1 with x R y; p carries the atom a at y
    lat = diamond()
    model = KripkeModel(2, (0b10, 0), {"p": (lat.bottom, 1), "q": (3, 2)})
    return lat, model


def test_constant_evaluates_to_top_everywhere():
    lat, model = diamond_model()
    for w in range(2):
        assert evaluate(model, lat, w, Const1()) == lat.top


def test_dead_end_world_boxes_to_top():
    lat, model = diamond_model()
    assert evaluate(model, lat, 1, Box(Const0())) == lat.top


def test_single_successor_box_is_that_value():
    lat, model = diamond_model()
    assert evaluate(model, lat, 0, Box(Var("p"))) == 1  # the atom a


def test_connectives_agree_with_tables():
    lat, model = diamond_model()
    for w in range(2):
        p = evaluate(model, lat, w, Var("p"))
        q = evaluate(model, lat, w, Var("q"))
        assert evaluate(model, lat, w, And(Var("p"), Var("q"))) == lat.meet[p, q]
        assert evaluate(model, lat, w, Or(Var("p"), Var("q"))) == lat.join[p, q]
        assert evaluate(model, lat, w, Imp(Var("p"), Var("q"))) == lat.implies[p, q]
        for level in range(lat.n):
            got = evaluate(model, lat, w, T(level, Var("p")))
            assert got == t_op(lat, level, p)
            assert got in (lat.bottom, lat.top)


def test_unbound_variable_raises():
    lat, model = diamond_model()
    with pytest.raises(UnboundVariable):
        evaluate(model, lat, 0, Var("missing"))


def test_unknown_level_raises_at_evaluation():
    lat, model = diamond_model()
    with pytest.raises(UnknownTruthConstant):
        evaluate(model, lat, 0, T(9, Var("p")))


# -- canonical models ---------------------------------------------------------------


def test_canonical_model_of_powerset_matches_frame():
    lat = chain(3)
    frame = [(0, 1), (1, 0), (1, 1)]
    alg = box_from_frame(lat, 2, frame)
    cm = canonical_model(alg)
    assert cm.model.n_worlds == 2
    world_of = [cm.homs.index(tuple(int(v) for v in alg.digits[:, p])) for p in range(2)]
    rel_set = {(a, b) for a, b in frame}
    for x in range(2):
        got = {y for y in range(2) if cm.model.rel[world_of[x]] >> world_of[y] & 1}
        assert got == {y for y in range(2) if (x, y) in rel_set}


def test_canonical_model_two_chain_identity_box():
    alg = self_algebra(chain(2), box=np.arange(2, dtype=np.int16))
    cm = canonical_model(alg)
    assert cm.model.n_worlds == 1
    assert cm.model.rel == (1,)  # one reflexive world


def test_constant_top_box_gives_empty_relation():
    alg = powerset_algebra(chain(2), 2).with_box(np.full(4, 3, dtype=np.int16))
    cm = canonical_model(alg)
    assert cm.model.rel == (0, 0)


def test_evaluate_agrees_with_hom_values_on_atoms():
    alg = box_from_frame(chain(3), 2, [(0, 1)])
    cm = canonical_model(alg)
    lat = alg.lattice
    for w in range(cm.model.n_worlds):
        for i in range(alg.n):
            assert evaluate(cm.model, lat, w, Var(f"a{i}")) == cm.d[w, i]


def test_truth_lemma_on_frame_algebras():
    for lat in (chain(2), chain(3), diamond()):
        for frame in ([], [(0, 0), (1, 1)], [(0, 1)], [(0, 1), (1, 0)]):
            alg = box_from_frame(lat, 2, frame)
            rep = check_truth_lemma(alg)
            assert rep.passed, (lat.labels, frame, rep.failures())


def test_truth_lemma_needs_the_modal_axioms():
    # a box violating the threshold axiom also breaks the truth lemma
    lat = chain(3)
    alg = powerset_algebra(lat, 2)
    middle = next(
        i for i in range(alg.n) if i not in (alg.bottom, alg.top)
        and tuple(alg.digits[i]) == (1, 1)
    )
    broken = alg.with_box(np.full(alg.n, middle, dtype=np.int16))
    from bitopdual.mvalgebra import check_lml_axioms

    assert not check_lml_axioms(broken).passed
    rep = check_truth_lemma(broken)
    assert not rep.passed


def test_formula_variables():
    f = parse_formula("T{1}(p & q) -> []r | p")
    assert formula_variables(f) == {"p", "q", "r"}
