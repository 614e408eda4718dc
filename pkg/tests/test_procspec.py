from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from landin.errors import DepthError, ParseError, SymbolError
from landin.procspec import (
    Atom,
    Choice,
    Seq,
    Star,
    emit_spec,
    parse_path,
    parse_spec,
    path_words,
    render_path,
)
from landin.traces import prefix_close

CORPUS = sorted((Path(__file__).parent / "data" / "corpus").glob("*.spec"))


def language_of(text):
    (spec,) = parse_spec(text)
    return spec.language()


def test_explicit_block():
    L = language_of('process P { alphabet: a, b; kind: explicit; traces = ["ab"]; depth: 3 }')
    assert L.alphabet == {"a", "b"}
    assert L.traces == {(), ("a",), ("a", "b")}
    assert L.depth == 3


def test_path_sequence_matches_explicit_block():
    L = language_of("process P { alphabet: a, b; kind: path; expr: a ; b; depth: 3 }")
    assert L.traces == {(), ("a",), ("a", "b")}


def test_path_star():
    L = language_of("process P { alphabet: a, b; kind: path; expr: (a ; b)*; depth: 4 }")
    assert L.traces == {(), ("a",), ("a", "b"), ("a", "b", "a"), ("a", "b", "a", "b")}


def test_prefixes_of_long_words_survive_truncation():
    L = language_of("process P { alphabet: a, b, c; kind: path; expr: a ; b ; c; depth: 2 }")
    assert L.traces == {(), ("a",), ("a", "b")}


def test_precedence():
    assert parse_path("a | b ; c*") == Choice((Atom("a"), Seq((Atom("b"), Star(Atom("c"))))))
    assert render_path(parse_path("(a | b) ; c")) == "(a | b) ; c"
    assert render_path(parse_path("((a))")) == "a"
    assert render_path(parse_path("(a ; b)*")) == "(a ; b)*"


def test_depth_defaults():
    L = language_of("process P { alphabet: a, b; kind: path; expr: a ; b | a }")
    assert L.depth == 2
    L = language_of('process P { alphabet: a; traces: "aa" }')
    assert L.depth == 2


def test_errors():
    with pytest.raises(DepthError):
        parse_spec("process P { alphabet: a; kind: path; expr: a* }")
    with pytest.raises(SymbolError):
        parse_spec("process P { alphabet: a; kind: path; expr: a ; b; depth: 2 }")
    with pytest.raises(SymbolError):
        parse_spec('process P { alphabet: a; traces: "ab"; depth: 2 }')
    with pytest.raises(ParseError) as err:
        parse_spec("process P {\n  alphabet: a;\n  kind: path;\n  expr: (a ;\n  depth: 2 }")
    assert err.value.line == 4
    with pytest.raises(ParseError):
        parse_spec("proc P { alphabet: a }")
    with pytest.raises(ParseError):
        parse_spec("process P { alphabet: a; kind: maybe }")
    with pytest.raises(ParseError):
        parse_spec("process P { alphabet: a; depth: 1 }\nprocess P { alphabet: a; depth: 1 }")
    with pytest.raises(ParseError):
        parse_spec("process P { alphabet: a; depth: -1; traces: \"a\" }")


def test_comments_are_ignored():
    text = 'process P { # header\n alphabet: a; # symbols\n traces: "a#"; depth: 1 }'
    with pytest.raises(SymbolError):
        parse_spec(text)
    text = 'process P { # header\n alphabet: a; # symbols\n traces: "a"; depth: 1 }'
    assert language_of(text).traces == {(), ("a",)}


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.name)
def test_corpus_round_trip(path):
    specs = parse_spec(path.read_text())
    text = emit_spec(specs)
    again = parse_spec(text)
    assert again == specs
    assert emit_spec(again) == text
    assert [s.language() for s in again] == [s.language() for s in specs]


def test_corpus_has_ten_files():
    assert len(CORPUS) == 10


def regex_words(node, longest):
    """Every word of the expression up to ``longest``, by brute-force
    matching against all candidate words."""
    import re

    pattern = re.compile(to_regex(node))
    symbols = sorted(symbols_of(node))
    return {w for w in oracles.words(symbols, longest) if pattern.fullmatch("".join(w))}


def to_regex(node):
    if isinstance(node, Atom):
        return node.symbol
    if isinstance(node, Star):
        return f"(?:{to_regex(node.body)})*"
    if isinstance(node, Seq):
        return "".join(f"(?:{to_regex(p)})" for p in node.parts)
    return "|".join(f"(?:{to_regex(o)})" for o in node.options)


def symbols_of(node):
    if isinstance(node, Atom):
        return {node.symbol}
    if isinstance(node, Star):
        return symbols_of(node.body)
    children = node.parts if isinstance(node, Seq) else node.options
    return set().union(*(symbols_of(c) for c in children))


paths = st.recursive(
    st.sampled_from([Atom("a"), Atom("b"), Atom("c")]),
    lambda inner: st.one_of(
        st.builds(Star, inner),
        st.lists(inner, min_size=2, max_size=3).map(lambda xs: Seq(tuple(xs))),
        st.lists(inner, min_size=2, max_size=3).map(lambda xs: Choice(tuple(xs))),
    ),
    max_leaves=5,
)


def leaves(node):
    if isinstance(node, Atom):
        return 1
    if isinstance(node, Star):
        return leaves(node.body)
    children = node.parts if isinstance(node, Seq) else node.options
    return sum(leaves(c) for c in children)


@settings(max_examples=80, deadline=None)
@given(paths, st.integers(0, 3))
def test_path_semantics_match_regex_oracle(node, depth):
    full, pref = path_words(node, depth)
    # a prefix can always be completed with at most one use of every leaf,
    # so words up to depth + leaves expose every prefix up to depth
    longer = regex_words(node, depth + leaves(node))
    assert full == {w for w in longer if len(w) <= depth}
    assert pref == {p for p in prefix_close(longer) if len(p) <= depth}


@settings(max_examples=80, deadline=None)
@given(paths)
def test_render_parse_round_trip(node):
    text = render_path(node)
    assert render_path(parse_path(text)) == text
