import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from strategies import as_pairs, languages, part_lists
from landin.errors import DepthError, EmptyLanguageError, SymbolError
from landin.traces import (
    PrefixLanguage,
    compose_parallel,
    is_prefix_closed,
    parse_trace,
    prefix_close,
    project,
    render_trace,
)


def test_project_examples():
    assert project((), {"a"}) == ()
    assert project(("a", "b"), {"a"}) == ("a",)
    abc = ("a", "b", "c")
    assert project(project(abc, {"a", "b"}), {"b", "c"}) == ("b",) == project(abc, {"b"})


def test_prefix_closed_examples():
    assert is_prefix_closed({()})
    assert is_prefix_closed({(), ("a",), ("a", "b")})
    assert not is_prefix_closed({(), ("a", "b")})


def test_prefix_close_examples():
    assert prefix_close([]) == {()}
    assert prefix_close([("a", "b")]) == {(), ("a",), ("a", "b")}
    assert prefix_close([(), ("a",)]) == {(), ("a",)}


def test_language_rejects_bad_input():
    with pytest.raises(EmptyLanguageError):
        PrefixLanguage(frozenset("a"), [], 1)
    with pytest.raises(EmptyLanguageError):
        PrefixLanguage(frozenset("ab"), [(), ("a", "b")], 2)
    with pytest.raises(SymbolError):
        PrefixLanguage(frozenset("a"), [(), ("b",)], 1)
    with pytest.raises(DepthError):
        PrefixLanguage(frozenset("a"), [(), ("a",)], 0)


def test_trace_text_round_trip():
    assert parse_trace("ab") == ("a", "b")
    assert parse_trace("") == () == parse_trace("ε")
    assert parse_trace("req ack", {"req", "ack"}) == ("req", "ack")
    assert parse_trace("reqack", {"req", "ack"}) == ("req", "ack")
    assert render_trace(("req", "ack"), {"req", "ack"}) == "req ack"
    assert render_trace((), empty="·") == "·"
    with pytest.raises(SymbolError):
        parse_trace("ax", {"a"})


def test_json_round_trip(L1):
    data = L1.to_json()
    assert data == {"alphabet": ["a", "b"], "depth": 3, "traces": ["", "a", "ab"]}
    assert PrefixLanguage.from_json(data) == L1


def test_compose_running_instance(running):
    L = compose_parallel(running, 3)
    assert L.alphabet == {"a", "b", "c"}
    assert L.traces == {(), ("a",), ("a", "b"), ("a", "b", "c")}
    assert L.traces == oracles.compose(as_pairs(running), 3)


def test_compose_equal_alphabets_is_intersection():
    L1 = PrefixLanguage.of("ab", ["ab", "ba"], 2)
    L2 = PrefixLanguage.of("ab", ["ab", "bb"], 2)
    assert compose_parallel([L1, L2]).traces == oracles.intersection(L1.traces, L2.traces)


def test_compose_disjoint_alphabets_is_shuffle():
    L1 = PrefixLanguage.of("a", ["a"], 2)
    L2 = PrefixLanguage.of("b", ["b"], 2)
    L = compose_parallel([L1, L2], 2)
    assert L.traces == {(), ("a",), ("b",), ("a", "b"), ("b", "a")}
    assert L.traces == oracles.shuffle(L1.traces, L2.traces, 2)


def test_compose_rejects_shallow_parts(L1):
    with pytest.raises(DepthError):
        compose_parallel([L1, PrefixLanguage.of("c", ["c"], 1)], 2)
    with pytest.raises(EmptyLanguageError):
        compose_parallel([], 1)


@settings(max_examples=60, deadline=None)
@given(part_lists())
def test_compose_matches_brute_force(case):
    parts, depth = case
    L = compose_parallel(parts, depth)
    assert L.traces == oracles.compose(as_pairs(parts), depth)


@settings(max_examples=60, deadline=None)
@given(part_lists(min_parts=2))
def test_compose_agrees_with_pairwise_fold(case):
    parts, depth = case
    acc = (set(parts[0].alphabet), set(parts[0].traces))
    for p in parts[1:]:
        acc = oracles.compose_binary(acc, (set(p.alphabet), set(p.traces)), depth)
    assert compose_parallel(parts, depth).traces == acc[1]


@settings(max_examples=60, deadline=None)
@given(part_lists())
def test_compose_output_is_a_language_projecting_into_parts(case):
    parts, depth = case
    L = compose_parallel(parts, depth)
    assert is_prefix_closed(L.traces)
    for p in parts:
        assert {project(t, p.alphabet) for t in L.traces} <= p.traces


@settings(max_examples=60, deadline=None)
@given(languages(), languages())
def test_compose_is_commutative(a, b):
    depth = min(a.depth, b.depth)
    assert compose_parallel([a, b], depth) == compose_parallel([b, a], depth)


@given(languages())
def test_compose_single_part_is_identity(L):
    assert compose_parallel([L]) == L


@given(st.lists(st.text(alphabet="ab", max_size=4), max_size=5))
def test_prefix_close_is_idempotent(texts):
    closed = prefix_close(parse_trace(t) for t in texts)
    assert prefix_close(closed) == closed
    assert is_prefix_closed(closed)
