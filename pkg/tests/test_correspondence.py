import pytest
from hypothesis import given, settings

import oracles
from strategies import as_pairs, as_tables, languages, part_lists, unary_algebras
from landin.algebra import (
    PartialAlgebra,
    algebraic_closure,
    check_homomorphism,
    check_subdirect,
    direct_product,
    homomorphisms,
    language_signature,
)
from landin.correspondence import (
    CHECKS,
    CheckReport,
    algebra_to_language,
    complete_vfs,
    decompose_vector_language,
    decomposed_to_vector_language,
    evaluation_map,
    g_alphabet,
    language_to_algebra,
    linearization_count,
    parallel_to_vfs_map,
    preimage_count,
    run_check,
    vector_language_to_algebra,
)
from landin.errors import CheckIdError, DepthError
from landin.traces import PrefixLanguage, compose_parallel
from landin.vectors import VectorString, vfs


def V(*parts):
    return VectorString(tuple(tuple(p) for p in parts))


def test_language_algebra_of_running_part(L1):
    A = language_to_algebra(L1, "abc")
    assert A.carrier == {(), ("a",), ("a", "b")}
    assert dict(A.tables["a"]) == {((),): ("a",)}
    assert dict(A.tables["b"]) == {(("a",),): ("a", "b")}
    assert dict(A.tables["c"]) == {(t,): t for t in A.carrier}
    assert g_alphabet(A) == {"a", "b"}
    assert algebra_to_language(A, 3) == L1


def test_smallest_language():
    A = language_to_algebra(PrefixLanguage.of("", [], 0), "ab")
    assert A.carrier == {()}
    assert all(dict(A.tables[s]) == {((),): ()} for s in "ab")
    assert g_alphabet(A) == frozenset()


def test_vector_algebra_of_running_instance(running):
    A = vector_language_to_algebra(vfs(running, 3))
    assert dict(A.tables["a"]) == {(V("", ""),): V("a", "")}
    assert dict(A.tables["b"]) == {(V("a", ""),): V("ab", "b")}
    assert dict(A.tables["c"]) == {(V("ab", "b"),): V("ab", "bc")}


def test_charth_and_corollary_on_running_instance(running):
    inst = {"parts": running}
    assert run_check("CHARTH", inst, 3).passed
    assert run_check("COROLLARY", inst, 3).passed
    assert run_check("CORRTH_IV", {"algebras": [language_to_algebra(L, "abc") for L in running]}, 3).passed


def test_charth_catches_a_corrupted_closure(running):
    prod = direct_product([language_to_algebra(L, "abc") for L in running])
    good = algebraic_closure(prod, 3).named()
    tables = {op: dict(t) for op, t in good.tables.items()}
    del tables["b"][("(a,ε)",)]
    broken = PartialAlgebra(good.signature, good.carrier, tables)
    report = run_check("CHARTH", {"parts": running, "closure": broken}, 3)
    assert not report.passed
    assert report.counterexample["op"] == "b"
    assert report.counterexample["args"] == ["(a,ε)"]


def test_closure_keeps_read_back_language():
    A = PartialAlgebra(language_signature("a"), [0, 1, 2], {"ε": {(): 0}, "a": {(0,): 1}})
    assert algebra_to_language(algebraic_closure(A), 3) == algebra_to_language(A, 3)
    assert run_check("CORRTH_III", {"algebra": A}, 3).passed


def test_evaluation_map_is_the_unique_strong_hom():
    A = PartialAlgebra(language_signature("ab"), [0, 1], {"ε": {(): 0}, "a": {(0,): 1, (1,): 0}, "b": {(1,): 1}})
    L = algebra_to_language(A, 2)
    source = language_to_algebra(L, "ab")
    g = evaluation_map(A, L)
    assert check_homomorphism(g, source, A, strong=True)
    assert homomorphisms(source, A) == [g]
    assert run_check("CORRTH_II", {"algebra": A}, 2).passed


def test_decomposition_of_running_instance(running):
    D = decompose_vector_language(complete_vfs(running), "abc", truncated=False)
    blocks = {frozenset(b) for b in D.congruences[0].blocks}
    assert blocks == {
        frozenset({V("", "")}),
        frozenset({V("a", "")}),
        frozenset({V("ab", "b"), V("ab", "bc")}),
    }
    assert check_subdirect(D.algebra, D.congruences)


def test_quotient_read_back_gains_the_foreign_symbol(running):
    # The kernel quotient leaves c undefined on the block of (a,ε), so c is
    # not the identity there and enters the read-back alphabet.
    D = decompose_vector_language(complete_vfs(running), "abc", truncated=False)
    assert [sorted(g_alphabet(Q)) for Q in D.quotients()] == [["a", "b", "c"], ["a", "b", "c"]]
    H = decomposed_to_vector_language(D, 3)
    assert {v.parts for v in H.vectors} != {v.parts for v in vfs(running, 3).vectors}
    for check_id in ("VECCORRTH_I", "LEMM4", "LEMM5"):
        assert not run_check(check_id, {"parts": running}, 3).passed
    for check_id in ("VECCORRTH_II", "VECCORRTH_III", "VECCORRTH_IV", "LEMM6"):
        assert run_check(check_id, {"parts": running}, 3).passed


def test_parallel_to_vfs_map(running):
    symbol_map, report = parallel_to_vfs_map(running, 3)
    assert report.passed
    assert symbol_map["b"].parts == (("b",), ("b",))
    disjoint = [PrefixLanguage.of("a", ["a"], 2), PrefixLanguage.of("b", ["b"], 2)]
    assert preimage_count(V("a", "b"), disjoint) == 2 == linearization_count(V("a", "b"), ("a", "b"))


def test_truncated_algebra_refuses_deeper_read_back(L1):
    A = language_to_algebra(PrefixLanguage.of("a", ["aa"], 2))
    with pytest.raises(DepthError):
        algebra_to_language(A, 3)


def test_reports_and_registry():
    report = CheckReport("X", False, 2)
    assert report.to_json() == {"check": "X", "pass": False, "depth": 2, "counterexample": {"reason": "unspecified"}}
    assert report.line().startswith("FAIL X")
    with pytest.raises(CheckIdError):
        run_check("NOPE", {})
    assert {"CHARTH", "COROLLARY", "LEMM6", "VECCORRTH_IV"} <= set(CHECKS)


@settings(max_examples=60, deadline=None)
@given(languages())
def test_language_algebra_matches_definition(L):
    sigma = sorted(L.alphabet | {"d"})
    A = language_to_algebra(L, sigma)
    carrier, tables = oracles.language_algebra(L.alphabet, L.traces, sigma)
    assert A.carrier == carrier
    assert {op: dict(t) for op, t in A.tables.items()} == tables


@settings(max_examples=60, deadline=None)
@given(languages())
def test_read_back_inverts_language_algebra(L):
    assert algebra_to_language(language_to_algebra(L), L.depth) == L


@settings(max_examples=60, deadline=None)
@given(unary_algebras())
def test_read_back_matches_direct_evaluation(A):
    L = algebra_to_language(A, 3)
    assert L.traces == oracles.readback(as_tables(A), L.alphabet, 3)


@settings(max_examples=40, deadline=None)
@given(part_lists(min_parts=2, max_depth=3))
def test_vector_algebra_matches_definition(case):
    parts, depth = case
    L = vfs(parts, depth)
    sigma = sorted(L.union_alphabet)
    A = vector_language_to_algebra(L, sigma)
    alphas = [p.alphabet for p in parts]
    carrier, tables = oracles.vector_algebra(alphas, {v.parts for v in L.vectors}, sigma)
    assert {v.parts for v in A.carrier} == carrier
    for op in sigma:
        assert {(a.parts,): b.parts for (a,), b in A.tables[op].items()} == tables[op]


@settings(max_examples=40, deadline=None)
@given(part_lists(min_parts=2, max_depth=3))
def test_charth_and_corollary_hold(case):
    parts, depth = case
    assert run_check("CHARTH", {"parts": parts}, depth).passed
    assert run_check("COROLLARY", {"parts": parts}, depth).passed
    G = algebra_to_language(vector_language_to_algebra(vfs(parts, depth)), depth)
    assert G.traces == oracles.compose(as_pairs(parts), depth)


@settings(max_examples=40, deadline=None)
@given(part_lists(min_parts=2, max_depth=3))
def test_every_vector_has_as_many_preimages_as_linearizations(case):
    parts, depth = case
    alphabets = tuple(p.alphabet for p in parts)
    for v in vfs(parts, depth).vectors:
        assert preimage_count(v, parts, depth) == linearization_count(v, alphabets)
        assert preimage_count(v, parts, depth) == len(oracles.preimages(v.parts, alphabets))


@settings(max_examples=40, deadline=None)
@given(part_lists(max_depth=3))
def test_parallel_to_vfs_is_strong_and_surjective(case):
    parts, depth = case
    assert parallel_to_vfs_map(parts, depth)[1].passed


@settings(max_examples=40, deadline=None)
@given(part_lists(min_parts=2, max_parts=2, max_depth=3))
def test_product_read_back_is_composition(case):
    parts, depth = case
    sigma = sorted(set().union(*(p.alphabet for p in parts)))
    algebras = [language_to_algebra(p, sigma) for p in parts]
    assert algebra_to_language(direct_product(algebras), depth) == compose_parallel(parts, depth)
