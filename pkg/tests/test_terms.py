import pytest
from hypothesis import given
from hypothesis import strategies as st

from landin.errors import ParseError, VariableError
from landin.terms import (
    EPS_TERM,
    App,
    Var,
    is_ground,
    operators,
    parse_term,
    read_spine,
    size,
    spine,
    substitute,
    term_of_trace,
    trace_of_term,
    variables,
)

X0 = Var(0)


def test_printing_and_parsing():
    t = App("c", (App("b", (X0,)),))
    assert str(t) == "((x0)b)c"
    assert parse_term("((x0)b)c") == t
    assert parse_term("ε") == EPS_TERM
    assert parse_term("(x0, x1)f") == App("f", (X0, Var(1)))


def test_parse_errors_carry_a_column():
    with pytest.raises(ParseError) as err:
        parse_term("((x0)b")
    assert err.value.column >= 1
    with pytest.raises(ParseError):
        parse_term("x0 x1")


def test_substitute_examples():
    s = App("b", (EPS_TERM,))
    assert substitute(X0, [s]) == s
    assert substitute(App("a", (X0,)), [s]) == parse_term("((ε)b)a")
    with pytest.raises(VariableError):
        substitute(Var(1), [s])


def test_spines():
    assert spine(("a", "b")) == parse_term("((ε)a)b")
    assert spine(("b", "c"), X0) == parse_term("((x0)b)c")
    assert read_spine(parse_term("((x0)b)c")) == (X0, ("b", "c"))
    assert read_spine(parse_term("(x0,x1)f")) is None
    assert trace_of_term(term_of_trace(("a", "b"))) == ("a", "b")
    with pytest.raises(ValueError):
        trace_of_term(parse_term("(x0)a"))


def test_queries():
    t = parse_term("((x0)b)c")
    assert variables(t) == {0}
    assert not is_ground(t)
    assert is_ground(EPS_TERM)
    assert operators(t) == {"b", "c"}
    assert size(t) == 3


unary_terms = st.recursive(
    st.sampled_from([EPS_TERM, X0]),
    lambda inner: st.builds(lambda t, op: App(op, (t,)), inner, st.sampled_from("abc")),
    max_leaves=6,
)
terms = st.recursive(
    st.sampled_from([EPS_TERM, X0, Var(1)]),
    lambda inner: st.one_of(
        st.builds(lambda t, op: App(op, (t,)), inner, st.sampled_from("abc")),
        st.builds(lambda s, t: App("f", (s, t)), inner, inner),
    ),
    max_leaves=8,
)


@given(terms)
def test_print_parse_round_trip(t):
    assert parse_term(str(t)) == t


@given(unary_terms)
def test_spine_round_trip(t):
    base, word = read_spine(t)
    assert spine(word, base) == t


@given(terms, terms, terms)
def test_substitution_is_associative(t, s0, s1):
    # substituting twice equals substituting the composed arguments once
    r0, r1 = App("a", (X0,)), EPS_TERM
    once = substitute(substitute(t, [s0, s1]), [r0, r1])
    twice = substitute(t, [substitute(s0, [r0, r1]), substitute(s1, [r0, r1])])
    assert once == twice


@given(terms)
def test_identity_substitution(t):
    assert substitute(t, [X0, Var(1)]) == t
