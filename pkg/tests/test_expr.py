import pytest
from hypothesis import given, settings, strategies as st

import polyprod as pp
from polyprod import expr
from polyprod.errors import BudgetExceeded, MixedOperatorsWithoutParens, ParseError
from polyprod.expr import Atom, Cart, CartPow, Join, JoinPow


def test_parse_nested_expression():
    ast = pp.parse_expr("((I*pt)x(I^x3))*(pt^*2)")
    assert ast == Join(
        Cart(Join(Atom("I"), Atom("pt")), CartPow(Atom("I"), 3)),
        JoinPow(Atom("pt"), 2),
    )


def test_parse_cart_power():
    assert pp.parse_expr("I^x3") == CartPow(Atom("I"), 3)


def test_parse_join_power():
    assert pp.parse_expr("pt^*4") == JoinPow(Atom("pt"), 4)


def test_parse_chain_same_operator():
    assert pp.parse_expr("pt * pt * pt") == Join(
        Join(Atom("pt"), Atom("pt")), Atom("pt")
    )


def test_mixed_operators_rejected():
    with pytest.raises(MixedOperatorsWithoutParens):
        pp.parse_expr("I*pt x pt")


def test_mixed_operators_fine_with_parens():
    ast = pp.parse_expr("(I*pt) x pt")
    assert ast == Cart(Join(Atom("I"), Atom("pt")), Atom("pt"))


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        pp.parse_expr("I * &")
    assert err.value.position == 4


def test_parse_error_unbalanced():
    with pytest.raises(ParseError):
        pp.parse_expr("(I*pt")
    with pytest.raises(ParseError):
        pp.parse_expr("I)")


def test_parse_error_zero_exponent():
    with pytest.raises(ParseError):
        pp.parse_expr("I^x0")


def test_whitespace_ignored():
    assert pp.parse_expr("  I ^x 3 ") == CartPow(Atom("I"), 3)


def test_eval_tetrahedron():
    P = pp.eval_expr(pp.parse_expr("pt^*4"))
    assert len(P) == 16
    assert pp.is_isomorphic(P, pp.power(pp.point(), "join", 4)) is not None


def test_eval_square():
    P = pp.eval_expr(pp.parse_expr("I^x2"))
    assert len(P) == 10


def test_eval_point():
    P = pp.eval_expr(pp.parse_expr("pt"))
    assert len(P) == 2


def test_eval_budget():
    with pytest.raises(BudgetExceeded):
        pp.eval_expr(pp.parse_expr("I^x8"), max_elements=1000)


def test_expr_to_family_nested_expression():
    node = pp.expr_to_family(pp.parse_expr("((I*pt)x(I^x3))*(pt^*2)"))
    assert node is not None
    assert node.path == ("*pt", "xI", "xI", "xI", "*pt", "*pt")


def test_expr_to_family_rejects_pt_power():
    assert pp.expr_to_family(pp.parse_expr("pt^*3")) is None


def test_expr_to_family_rejects_compound_right_factor():
    assert pp.expr_to_family(pp.parse_expr("I x (I*pt)")) is None


def test_expr_to_family_simple():
    node = pp.expr_to_family(pp.parse_expr("I^x3"))
    assert node is not None and node.path == ("xI", "xI")
    node = pp.expr_to_family(pp.parse_expr("I"))
    assert node is not None and node.path == ()


def test_family_node_matches_eval():
    for text in ["I", "I^x2", "I*pt", "(I*pt)xI", "(IxI)*pt", "I^x3"]:
        node = pp.expr_to_family(pp.parse_expr(text))
        assert node is not None, text
        built = pp.eval_expr(pp.parse_expr(text))
        assert pp.is_isomorphic(built, node.polytope) is not None, text


_atoms = st.sampled_from(["pt", "I"]).map(Atom)


def _extend(children):
    return st.one_of(
        st.tuples(children, children).map(lambda t: Join(*t)),
        st.tuples(children, children).map(lambda t: Cart(*t)),
        st.tuples(children, st.integers(1, 4)).map(lambda t: JoinPow(*t)),
        st.tuples(children, st.integers(1, 4)).map(lambda t: CartPow(*t)),
    )


_asts = st.recursive(_atoms, _extend, max_leaves=6)


@settings(max_examples=150, deadline=None)
@given(_asts)
def test_parse_render_round_trip(ast):
    assert pp.parse_expr(expr.render_expr(ast)) == ast


@settings(max_examples=60, deadline=None)
@given(_asts)
def test_expr_size_matches_built_poset(ast):
    size = expr.expr_size(ast)
    if size > 400:
        return
    P = pp.eval_expr(ast, check=False)
    assert len(P) == size
