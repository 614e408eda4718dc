"""Translations between languages and algebras, and instance checkers for the
correspondence properties.

``language_to_algebra`` turns a language into the algebra of its traces, with
each symbol acting as a partial successor map; ``algebra_to_language`` reads
back the projected behaviours of an algebra. The vector variants do the same
for vector languages and algebras equipped with a family of congruences.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .algebra import (
    Congruence,
    PartialAlgebra,
    algebraic_closure,
    check_homomorphism,
    closure_carrier,
    compare_algebras,
    direct_product,
    element_name,
    eval_term,
    homomorphisms,
    homomorphism_violation,
    language_signature,
    quotient,
    subdirect_violation,
    unique_hom_from_fg,
)
from .errors import CheckIdError, DepthError, LandinError, SignatureError, SymbolError
from .terms import EPS, spine
from .traces import (
    EPSILON,
    PrefixLanguage,
    compose_parallel,
    project,
    render_trace,
    sorted_traces,
    union_alphabet,
)
from .vectors import (
    VectorLanguage,
    VectorString,
    commutation_class,
    component,
    linearize,
    product,
    vconcat,
    vfs,
    vops,
    word_ops,
)


def _sigma_for(alphabet, sigma) -> list:
    if sigma is None:
        return sorted(alphabet)
    sigma = set(sigma)
    missing = set(alphabet) - sigma
    if missing:
        raise SymbolError(f"symbols {sorted(missing)} are not in the signature alphabet")
    return sorted(sigma)


def language_to_algebra(L: PrefixLanguage, sigma=None, truncated: bool = True) -> PartialAlgebra:
    """Traces as states: a symbol of the alphabet extends a trace when the
    extension is in ``L``; any other symbol of ``sigma`` acts as the identity.
    Unless ``L`` is declared complete (``truncated=False``), traces at the
    depth bound form the frontier."""
    symbols = _sigma_for(L.alphabet, sigma)
    tables = {EPS: {(): EPSILON}}
    for sym in symbols:
        if sym in L.alphabet:
            tables[sym] = {(t,): t + (sym,) for t in L.traces if t + (sym,) in L.traces}
        else:
            tables[sym] = {(t,): t for t in L.traces}
    frontier = {t for t in L.traces if len(t) == L.depth} if truncated else ()
    return PartialAlgebra(language_signature(symbols), L.traces, tables, frontier)


def vector_language_to_algebra(L: VectorLanguage, sigma=None, truncated: bool = True) -> PartialAlgebra:
    """Vectors as states: ``σ`` appends its vector operation when the result
    stays in ``L``; symbols outside every component alphabet act as the
    identity."""
    symbols = _sigma_for(L.union_alphabet, sigma)
    ops = L.ops()
    unit = VectorString.unit(L.dim)
    tables = {EPS: {(): unit}}
    for sym in symbols:
        if sym in ops:
            table = {}
            for v in L.vectors:
                w = vconcat(v, ops[sym])
                if w in L.vectors:
                    table[(v,)] = w
            tables[sym] = table
        else:
            tables[sym] = {(v,): v for v in L.vectors}
    frontier = {v for v in L.vectors if v.op_count == L.depth} if truncated else ()
    return PartialAlgebra(language_signature(symbols), L.vectors, tables, frontier)


def _require_unary(A: PartialAlgebra):
    if not A.is_language_signature():
        raise SignatureError("expected the constant ε plus unary operators")


def symbols_of(A: PartialAlgebra) -> list:
    return sorted(op for op, n in A.signature.items() if n == 1)


def g_alphabet(A: PartialAlgebra) -> frozenset:
    """Symbols whose operation, restricted to the closure carrier, is not the
    identity on the closure carrier."""
    _require_unary(A)
    reach = closure_carrier(A)
    out = set()
    for sym in symbols_of(A):
        table = A.tables[sym]
        if any(table.get((a,)) != a for a in reach):
            out.add(sym)
    return frozenset(out)


def _walk(A: PartialAlgebra, alphabet, depth: int):
    """Yield ``(word, value)`` for every word over ``alphabet`` of length at
    most ``depth`` whose term is defined in ``A``."""
    level = [(EPSILON, A.apply(EPS))]
    for n in range(depth + 1):
        yield from level
        if n == depth:
            return
        grown = []
        for word, a in level:
            for sym in alphabet:
                b = A.apply(sym, (a,))
                if b is None:
                    if a in A.frontier:
                        raise DepthError(f"algebra is truncated below depth {depth} at {element_name(a)}")
                    continue
                grown.append((word + (sym,), b))
        level = grown


def algebra_to_language(A: PartialAlgebra, depth: int) -> PrefixLanguage:
    """The projected behaviours of ``A`` up to length ``depth``."""
    alphabet = g_alphabet(A)
    traces = {word for word, _ in _walk(A, sorted(alphabet), depth)}
    return PrefixLanguage(alphabet, traces, depth)


def evaluation_map(A: PartialAlgebra, language: PrefixLanguage) -> dict:
    """``t ↦ t^A`` on the traces of ``language``; undefined terms are left out."""
    out = {}
    for t in language.traces:
        v = eval_term(spine(t), A)
        if v is not None:
            out[t] = v
    return out


@dataclass(frozen=True, eq=False)
class DecomposedAlgebra:
    """An algebra with a family of congruences forming a subdirect
    decomposition of it."""

    algebra: PartialAlgebra
    congruences: tuple
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "congruences", tuple(self.congruences))
        if self.validate:
            bad = subdirect_violation(self.algebra, self.congruences)
            if bad is not None:
                from .errors import CongruenceError

                raise CongruenceError(f"not a subdirect decomposition: {bad['reason']}")

    def quotients(self) -> list:
        return [quotient(self.algebra, th) for th in self.congruences]

    @property
    def dim(self) -> int:
        return len(self.congruences)


def decompose_vector_language(L: VectorLanguage, sigma=None, truncated: bool = True) -> DecomposedAlgebra:
    """The vector algebra of ``L`` with the kernels of its component
    projections."""
    A = vector_language_to_algebra(L, sigma, truncated)
    thetas = [Congruence.kernel(A.carrier, lambda v, i=i: v.parts[i]) for i in range(L.dim)]
    return DecomposedAlgebra(A, thetas)


def decomposed_to_vector_language(D: DecomposedAlgebra, depth: int) -> VectorLanguage:
    """Vector products of at most ``depth`` operations, over the alphabets
    read back from the quotients, whose terms are defined in the algebra."""
    A = D.algebra
    _require_unary(A)
    alphabets = tuple(g_alphabet(Q) for Q in D.quotients())
    union = sorted(frozenset().union(*alphabets))
    ops = vops(alphabets) if union else {}
    unit = VectorString.unit(len(alphabets))
    seen = {(unit, A.apply(EPS))}
    level = list(seen)
    for _ in range(depth):
        grown = []
        for v, a in level:
            for sym in union:
                b = A.apply(sym, (a,))
                if b is None:
                    if a in A.frontier:
                        raise DepthError(f"algebra is truncated below depth {depth} at {element_name(a)}")
                    continue
                state = (vconcat(v, ops[sym]), b)
                if state not in seen:
                    seen.add(state)
                    grown.append(state)
        level = grown
    return VectorLanguage(alphabets, {v for v, _ in seen}, depth)


def parallel_to_vfs_image(word, alphabets) -> VectorString:
    """Image of a composition trace under ``σ ↦ σ̲``."""
    return product(word_ops(word, alphabets), len(alphabets))


@dataclass
class CheckReport:
    check: str
    passed: bool
    depth: int
    instance: str = ""
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            self.counterexample = {"reason": "unspecified"}

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "pass": self.passed,
            "depth": self.depth,
            "counterexample": self.counterexample,
        }
        if self.instance:
            out["instance"] = self.instance
        if self.details:
            out["details"] = self.details
        return out

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {self.check} depth={self.depth} {self.instance}".rstrip()


def parallel_to_vfs_map(parts: Sequence[PrefixLanguage], depth: int | None = None):
    """The symbol map ``σ ↦ σ̲`` from the parallel composition to the vector
    firing sequences, checked to be a strong surjective simulation."""
    parts = list(parts)
    if depth is None:
        depth = min(p.depth for p in parts) if parts else 0
    comp = compose_parallel(parts, depth)
    target = vfs(parts, depth)
    alphabets = target.alphabets
    ops = vops(alphabets)
    symbol_map = {sym: ops[sym] for sym in sorted(comp.alphabet)}
    report = CheckReport("PARALLEL_TO_VFS", True, depth, _describe_parts(parts))
    hit = set()
    for word in _all_words(sorted(comp.alphabet), depth):
        image = parallel_to_vfs_image(word, alphabets)
        inside = word in comp.traces
        if inside != (image in target.vectors):
            report.passed = False
            report.counterexample = {
                "witness": render_trace(word, comp.alphabet, "ε"),
                "in_composition": inside,
                "image": element_name(image),
                "image_in_vfs": image in target.vectors,
            }
            return symbol_map, report
        if inside:
            hit.add(image)
    missing = target.vectors - hit
    if missing:
        v = min(missing, key=VectorString.sort_key)
        report.passed = False
        report.counterexample = {"reason": "vector without preimage", "witness": element_name(v)}
    return symbol_map, report


def _all_words(symbols, depth: int):
    for n in range(depth + 1):
        yield from itertools.product(symbols, repeat=n)


def preimage_count(v: VectorString, parts: Sequence[PrefixLanguage], depth: int | None = None) -> int:
    """Number of composition traces mapped to ``v`` by ``σ ↦ σ̲``."""
    parts = list(parts)
    if depth is None:
        depth = min(p.depth for p in parts)
    comp = compose_parallel(parts, depth)
    alphabets = tuple(p.alphabet for p in parts)
    return sum(1 for t in comp.traces if len(t) == v.op_count and parallel_to_vfs_image(t, alphabets) == v)


# ---------------------------------------------------------------------------
# Comparison helpers


def language_difference(left: PrefixLanguage, right: PrefixLanguage):
    if left.alphabet != right.alphabet:
        return {"reason": "alphabets differ", "left": sorted(left.alphabet), "right": sorted(right.alphabet)}
    diff = left.traces ^ right.traces
    if diff:
        t = sorted_traces(diff)[0]
        return {
            "reason": "traces differ",
            "witness": render_trace(t, left.alphabet, "ε"),
            "left": t in left.traces,
            "right": t in right.traces,
        }
    if left.depth != right.depth:
        return {"reason": "depths differ", "left": left.depth, "right": right.depth}
    return None


def vector_language_difference(left: VectorLanguage, right: VectorLanguage):
    if left.alphabets != right.alphabets:
        return {
            "reason": "alphabet vectors differ",
            "left": [sorted(a) for a in left.alphabets],
            "right": [sorted(a) for a in right.alphabets],
        }
    diff = left.vectors ^ right.vectors
    if diff:
        v = min(diff, key=VectorString.sort_key)
        return {
            "reason": "vectors differ",
            "witness": element_name(v),
            "left": v in left.vectors,
            "right": v in right.vectors,
        }
    return None


def _describe_parts(parts) -> str:
    return " || ".join(repr(p) for p in parts)


def _report(check: str, depth: int, instance: str, diff, **details) -> CheckReport:
    return CheckReport(check, diff is None, depth, instance, diff, details)


# ---------------------------------------------------------------------------
# Instance checks. Every check takes a dict of inputs and a depth.


def _parts_and_sigma(inst: dict, depth):
    parts = list(inst["parts"])
    if depth is None:
        depth = min(p.depth for p in parts)
    if any(p.depth < depth for p in parts):
        raise DepthError(f"a part is shallower than depth {depth}")
    parts = [p.truncate(depth) for p in parts]
    sigma = sorted(set(inst.get("sigma") or ()) | union_alphabet(parts))
    return parts, sigma, depth


def _language_and_sigma(inst: dict, depth):
    L = inst["language"]
    if depth is None:
        depth = L.depth
    L = L.truncate(depth)
    sigma = sorted(set(inst.get("sigma") or ()) | L.alphabet)
    return L, sigma, depth


def _algebra_depth(inst: dict, depth) -> int:
    return inst.get("depth", 4) if depth is None else depth


def check_charth(inst: dict, depth=None) -> CheckReport:
    parts, sigma, depth = _parts_and_sigma(inst, depth)
    left = vector_language_to_algebra(vfs(parts, depth), sigma).named()
    if inst.get("closure") is not None:
        right = inst["closure"]
    else:
        prod = direct_product([language_to_algebra(p, sigma) for p in parts])
        right = algebraic_closure(prod, depth).named()
    return _report("CHARTH", depth, _describe_parts(parts), compare_algebras(left, right))


def check_corollary(inst: dict, depth=None) -> CheckReport:
    parts, sigma, depth = _parts_and_sigma(inst, depth)
    left = algebra_to_language(vector_language_to_algebra(vfs(parts, depth), sigma), depth)
    right = compose_parallel(parts, depth)
    return _report("COROLLARY", depth, _describe_parts(parts), language_difference(left, right))


def check_corrth_i(inst: dict, depth=None) -> CheckReport:
    L, sigma, depth = _language_and_sigma(inst, depth)
    left = algebra_to_language(language_to_algebra(L, sigma), depth)
    return _report("CORRTH_I", depth, repr(L), language_difference(left, L))


def _uniqueness(source: PartialAlgebra, target: PartialAlgebra, phi: dict, limit: int = 4):
    """Exhaustive search for homomorphisms other than ``phi``; ``None`` when
    the source carrier is above ``limit``."""
    if len(source.carrier) > limit:
        return None
    return [h for h in homomorphisms(source, target) if h != phi]


def _evaluation_hom_report(check: str, depth: int, desc: str, source, target, limit=4) -> CheckReport:
    try:
        phi = unique_hom_from_fg(source, target)
    except LandinError as exc:
        return _report(check, depth, desc, {"reason": str(exc)})
    if phi is None:
        return _report(check, depth, desc, {"reason": "evaluation map is not a homomorphism"})
    bad = homomorphism_violation(phi, source, target, strong=True)
    if bad is not None:
        bad = dict(bad, args=[element_name(a) for a in bad["args"]])
        for key in ("source", "target"):
            if key in bad:
                bad[key] = element_name(bad[key])
        return _report(check, depth, desc, dict(bad, reason="not strong: " + bad["reason"]))
    others = _uniqueness(source, target, phi, limit)
    details = {"carrier": len(source.carrier), "uniqueness": "exhaustive" if others is not None else "skipped"}
    if others:
        h = others[0]
        return _report(
            check,
            depth,
            desc,
            {
                "reason": "second homomorphism",
                "map": {element_name(a): element_name(b) for a, b in sorted(h.items(), key=lambda kv: element_name(kv[0]))},
            },
            **details,
        )
    return _report(check, depth, desc, None, **details)


def check_corrth_ii(inst: dict, depth=None) -> CheckReport:
    A = inst["algebra"]
    depth = _algebra_depth(inst, depth)
    source = language_to_algebra(algebra_to_language(A, depth), symbols_of(A))
    return _evaluation_hom_report("CORRTH_II", depth, repr(A), source, A)


def check_corrth_iii(inst: dict, depth=None) -> CheckReport:
    A = inst["algebra"]
    depth = _algebra_depth(inst, depth)
    left = algebra_to_language(algebraic_closure(A), depth)
    right = algebra_to_language(A, depth)
    return _report("CORRTH_III", depth, repr(A), language_difference(left, right))


def check_corrth_iv(inst: dict, depth=None) -> CheckReport:
    algebras = list(inst["algebras"])
    depth = _algebra_depth(inst, depth)
    left = algebra_to_language(direct_product(algebras), depth)
    right = compose_parallel([algebra_to_language(A, depth) for A in algebras], depth)
    desc = " x ".join(repr(A) for A in algebras)
    return _report("CORRTH_IV", depth, desc, language_difference(left, right))


def complete_vfs(parts: Sequence[PrefixLanguage]) -> VectorLanguage:
    """Every vector firing sequence of the parts read as finite languages.

    No product can have more operations than the parts have symbols in
    total, so that bound makes the enumeration complete. Quotients of the
    resulting algebra need this: a block gathers vectors of different
    lengths, and truncation would leave some of them cut off."""
    bound = sum(max(len(t) for t in p.traces) for p in parts)
    return vfs([PrefixLanguage(p.alphabet, p.traces, bound) for p in parts], bound)


def check_veccorrth_i(inst: dict, depth=None) -> CheckReport:
    parts, sigma, depth = _parts_and_sigma(inst, depth)
    D = decompose_vector_language(complete_vfs(parts), sigma, truncated=False)
    left = decomposed_to_vector_language(D, depth)
    right = vfs(parts, depth)
    return _report("VECCORRTH_I", depth, _describe_parts(parts), vector_language_difference(left, right))


def _decomposed(inst: dict, depth):
    if "decomposed" in inst:
        return inst["decomposed"], _algebra_depth(inst, depth)
    parts, sigma, depth = _parts_and_sigma(inst, depth)
    return decompose_vector_language(complete_vfs(parts), sigma, truncated=False), depth


def check_veccorrth_ii(inst: dict, depth=None) -> CheckReport:
    D, depth = _decomposed(inst, depth)
    A = D.algebra
    source = vector_language_to_algebra(decomposed_to_vector_language(D, depth), symbols_of(A))
    return _evaluation_hom_report("VECCORRTH_II", depth, repr(A), source, A)


def check_veccorrth_iii(inst: dict, depth=None) -> CheckReport:
    D, depth = _decomposed(inst, depth)
    A = D.algebra
    closed = algebraic_closure(A)
    thetas = [th.restrict(closed.carrier) for th in D.congruences]
    bad = subdirect_violation(closed, thetas)
    if bad is not None:
        return _report("VECCORRTH_III", depth, repr(A), dict(bad, reason="restricted family: " + bad["reason"]))
    left = decomposed_to_vector_language(DecomposedAlgebra(closed, thetas, validate=False), depth)
    right = decomposed_to_vector_language(D, depth)
    return _report("VECCORRTH_III", depth, repr(A), vector_language_difference(left, right))


def check_veccorrth_iv(inst: dict, depth=None) -> CheckReport:
    D, depth = _decomposed(inst, depth)
    left = decomposed_to_vector_language(D, depth)
    right = vfs([algebra_to_language(Q, depth) for Q in D.quotients()], depth)
    return _report("VECCORRTH_IV", depth, repr(D.algebra), vector_language_difference(left, right))


def check_lemm1(inst: dict, depth=None) -> CheckReport:
    L, sigma, depth = _language_and_sigma(inst, depth)
    A = language_to_algebra(L, sigma)
    for word in _all_words(sigma, depth):
        p = project(word, L.alphabet)
        value = eval_term(spine(word), A)
        lhs = p in L.traces
        rhs = value is not None and value == p
        if lhs != rhs:
            return _report(
                "LEMM1", depth, repr(L),
                {"witness": render_trace(word, sigma, "ε"), "left": lhs, "right": rhs},
            )
    return _report("LEMM1", depth, repr(L), None)


def check_lemm2(inst: dict, depth=None) -> CheckReport:
    algebras = list(inst["algebras"])
    depth = _algebra_depth(inst, depth)
    P = direct_product(algebras)
    desc = " x ".join(repr(A) for A in algebras)
    for word in _all_words(symbols_of(P), depth):
        t = spine(word)
        left = eval_term(t, P)
        vals = [eval_term(t, A) for A in algebras]
        right = None if any(v is None for v in vals) else tuple(vals)
        if left != right:
            show = lambda v: None if v is None else element_name(v)
            return _report(
                "LEMM2", depth, desc,
                {"witness": str(t), "left": show(left), "right": show(right)},
            )
    return _report("LEMM2", depth, desc, None)


def check_lemm3(inst: dict, depth=None) -> CheckReport:
    """(i) on ``language``, (ii) on each of ``algebras``, (iii) on their
    product."""
    failures = []
    desc = []
    if "language" in inst:
        L, sigma, _ = _language_and_sigma(inst, None)
        A = language_to_algebra(L, sigma)
        desc.append(repr(L))
        for sym in sigma:
            is_id = all(A.apply(sym, (t,)) == t for t in A.carrier)
            if is_id != (sym not in L.alphabet):
                failures.append({"part": "i", "symbol": sym, "identity": is_id})
    algebras = list(inst.get("algebras", ()))
    for A in algebras:
        if g_alphabet(algebraic_closure(A)) != g_alphabet(A):
            failures.append({"part": "ii", "algebra": repr(A)})
    if algebras:
        desc.append(" x ".join(repr(A) for A in algebras))
        left = g_alphabet(direct_product(algebras))
        right = frozenset().union(*(g_alphabet(A) for A in algebras))
        if left != right:
            failures.append({"part": "iii", "left": sorted(left), "right": sorted(right)})
    depth = 0 if depth is None else depth
    diff = None if not failures else dict(failures[0], failures=len(failures))
    return _report("LEMM3", depth, "; ".join(desc), diff)


def _block_trace(block, i):
    return next(iter(block)).parts[i]


def check_lemm4(inst: dict, depth=None) -> CheckReport:
    parts, sigma, depth = _parts_and_sigma(inst, depth)
    L = complete_vfs(parts)
    D = decompose_vector_language(L, sigma, truncated=False)
    for i, Q in enumerate(D.quotients()):
        left = Q.rename(lambda b, i=i: _block_trace(b, i)).named()
        right = language_to_algebra(component(L, i), sigma, truncated=False).named()
        diff = compare_algebras(left, right)
        if diff is not None:
            return _report("LEMM4", depth, _describe_parts(parts), dict(diff, component=i))
    return _report("LEMM4", depth, _describe_parts(parts), None)


def check_lemm5(inst: dict, depth=None) -> CheckReport:
    parts, sigma, depth = _parts_and_sigma(inst, depth)
    L = complete_vfs(parts)
    D = decompose_vector_language(L, sigma, truncated=False)
    for i, Q in enumerate(D.quotients()):
        got = g_alphabet(Q)
        if got != L.alphabets[i]:
            return _report(
                "LEMM5", depth, _describe_parts(parts),
                {"component": i, "left": sorted(got), "right": sorted(L.alphabets[i])},
            )
    return _report("LEMM5", depth, _describe_parts(parts), None)


def check_lemm6(inst: dict, depth=None) -> CheckReport:
    """Component ``i`` of a product of vector operations is the projection of
    the symbol word onto the ``i``-th alphabet."""
    if "parts" in inst:
        parts, _, depth = _parts_and_sigma(inst, depth)
        alphabets = tuple(p.alphabet for p in parts)
    else:
        alphabets = tuple(frozenset(a) for a in inst["alphabets"])
        depth = _algebra_depth(inst, depth)
    union = sorted(frozenset().union(*alphabets))
    words = inst.get("words")
    if words is None:
        words = _all_words(union, min(depth, 4))
    desc = f"alphabets {[sorted(a) for a in alphabets]}"
    for word in words:
        v = parallel_to_vfs_image(word, alphabets)
        for i, alpha in enumerate(alphabets):
            if v.parts[i] != project(word, alpha):
                return _report(
                    "LEMM6", depth, desc,
                    {"witness": " ".join(word), "component": i, "left": render_trace(v.parts[i], alpha, "ε")},
                )
    return _report("LEMM6", depth, desc, None)


CHECKS: dict = {
    "CHARTH": check_charth,
    "CORRTH_I": check_corrth_i,
    "CORRTH_II": check_corrth_ii,
    "CORRTH_III": check_corrth_iii,
    "CORRTH_IV": check_corrth_iv,
    "COROLLARY": check_corollary,
    "VECCORRTH_I": check_veccorrth_i,
    "VECCORRTH_II": check_veccorrth_ii,
    "VECCORRTH_III": check_veccorrth_iii,
    "VECCORRTH_IV": check_veccorrth_iv,
    "LEMM1": check_lemm1,
    "LEMM2": check_lemm2,
    "LEMM3": check_lemm3,
    "LEMM4": check_lemm4,
    "LEMM5": check_lemm5,
    "LEMM6": check_lemm6,
}


def _parallel_check(inst: dict, depth=None) -> CheckReport:
    return parallel_to_vfs_map(inst["parts"], depth)[1]


CHECKS["PARALLEL_TO_VFS"] = _parallel_check


def register_check(check_id: str, fn: Callable):
    CHECKS[check_id] = fn


def run_check(check_id: str, instance: dict, depth: int | None = None) -> CheckReport:
    try:
        fn = CHECKS[check_id]
    except KeyError:
        raise CheckIdError(f"unknown check id {check_id!r}") from None
    return fn(instance, depth)


def linearization_count(v: VectorString, alphabets) -> int:
    """Size of the commutation class of ``v``'s factorisation."""
    return len(commutation_class(linearize(v, alphabets)))
