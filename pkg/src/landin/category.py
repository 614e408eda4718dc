"""Morphisms: simulations between languages, derivors and derived
homomorphisms between algebras, the functors between them, and checks for
naturality and the adjunction.

A derivor reinterprets every operator as a term in variables ``x0, x1, ...``
of the same signature. Over the unary language signature a canonical derivor
sends each symbol to a spine ``(...((x0)s1)...)sn``, which reads as the word
``s1...sn``; this reading is how derived homomorphisms become simulations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

from .algebra import (
    PartialAlgebra,
    check_homomorphism,
    element_name,
    eval_term,
    homomorphism_violation,
    unique_hom_from_fg,
)
from .correspondence import (
    CheckReport,
    algebra_to_language,
    evaluation_map,
    g_alphabet,
    language_to_algebra,
    register_check,
    symbols_of,
    vector_language_to_algebra,
)
from .errors import (
    CanonicalError,
    ConcurrencyError,
    DepthError,
    MapError,
    SignatureError,
)
from .terms import EPS, EPS_TERM, App, Var, is_ground, operators, parse_term, read_spine, spine, substitute
from .traces import EPSILON, PrefixLanguage, render_trace
from .vectors import (
    VectorLanguage,
    VectorString,
    independent,
    linearize,
    monoid_equal,
    product,
    vconcat,
    word_ops,
)

X0 = Var(0)


# ---------------------------------------------------------------------------
# Simulations


def _word(w) -> tuple:
    if isinstance(w, str):
        return tuple(w.split()) if " " in w else tuple(w)
    return tuple(w)


@dataclass(frozen=True)
class Simulation:
    """A symbol-to-word map from ``source`` to ``target``, extended to traces
    by concatenation. ``strong`` records the claim to be checked."""

    source: PrefixLanguage
    target: PrefixLanguage
    symbol_map: Mapping
    strong: bool = False

    def __post_init__(self):
        table = {sym: _word(w) for sym, w in dict(self.symbol_map).items()}
        missing = self.source.alphabet - set(table)
        if missing:
            raise MapError(f"no image for symbols {sorted(missing)}")
        extra = set(table) - self.source.alphabet
        if extra:
            raise MapError(f"images given for symbols {sorted(extra)} outside the source alphabet")
        for sym, w in table.items():
            stray = set(w) - self.target.alphabet
            if stray:
                raise MapError(f"image of {sym} uses {sorted(stray)} outside the target alphabet")
        object.__setattr__(self, "symbol_map", dict(sorted(table.items())))

    def __hash__(self):
        return hash((self.source, self.target, tuple(self.symbol_map.items()), self.strong))

    def __call__(self, trace) -> tuple:
        out = []
        for sym in trace:
            out.extend(self.symbol_map[sym])
        return tuple(out)

    @property
    def stretch(self) -> int:
        """Longest image of a single symbol."""
        return max((len(w) for w in self.symbol_map.values()), default=0)

    def to_json(self, depth: int | None = None) -> dict:
        return {
            "map": {s: render_trace(w, self.target.alphabet) for s, w in self.symbol_map.items()},
            "strong": self.strong,
            "depth": self.source.depth if depth is None else depth,
        }


def identity_simulation(L: PrefixLanguage) -> Simulation:
    return Simulation(L, L, {s: (s,) for s in L.alphabet}, strong=True)


def compose_simulations(f: Simulation, g: Simulation) -> Simulation:
    """``g ∘ f``: first ``f``, then ``g``."""
    if f.target != g.source:
        raise MapError("simulations are not composable")
    return Simulation(f.source, g.target, {s: g(w) for s, w in f.symbol_map.items()}, f.strong and g.strong)


def _require_target_depth(f, depth: int):
    need = f.stretch * depth
    if f.target.depth < need:
        raise DepthError(f"target depth {f.target.depth} is below {need} needed to check depth {depth}")


def simulation_violation(f: Simulation, depth: int | None = None, strong: bool | None = None):
    """First trace breaking the simulation property (or, when strong, its
    converse), or ``None``."""
    depth = f.source.depth if depth is None else depth
    if depth > f.source.depth:
        raise DepthError(f"source is only exact to depth {f.source.depth}")
    strong = f.strong if strong is None else strong
    _require_target_depth(f, depth)
    for s in sorted(f.source.traces, key=len):
        if len(s) <= depth and f(s) not in f.target.traces:
            return {"witness": render_trace(s, f.source.alphabet, "ε"), "reason": "image not in target"}
    if strong:
        symbols = sorted(f.source.alphabet)
        level = [EPSILON]
        for _ in range(depth):
            grown = []
            for s in level:
                for sym in symbols:
                    t = s + (sym,)
                    if f(t) not in f.target.traces:
                        continue
                    if t not in f.source.traces:
                        return {
                            "witness": render_trace(t, f.source.alphabet, "ε"),
                            "reason": "image in target but trace not in source",
                        }
                    grown.append(t)
            level = grown
    return None


def check_simulation(f: Simulation, depth: int | None = None) -> bool:
    return simulation_violation(f, depth) is None


# ---------------------------------------------------------------------------
# Vector simulations


@dataclass(frozen=True)
class VectorSimulation:
    """A map from the vector operations of ``source`` (named by their symbol)
    to words of vector operations of ``target``."""

    source: VectorLanguage
    target: VectorLanguage
    symbol_map: Mapping
    strong: bool = False

    def __post_init__(self):
        table = {sym: _word(w) for sym, w in dict(self.symbol_map).items()}
        if set(table) != set(self.source.union_alphabet):
            raise MapError("vector simulation must map exactly the source operations")
        for sym, w in table.items():
            stray = set(w) - self.target.union_alphabet
            if stray:
                raise MapError(f"image of {sym} uses {sorted(stray)} outside the target operations")
        object.__setattr__(self, "symbol_map", dict(sorted(table.items())))

    def __hash__(self):
        return hash((self.source.alphabets, self.target.alphabets, tuple(self.symbol_map.items())))

    def image(self, sym: str) -> VectorString:
        return product(word_ops(self.symbol_map[sym], self.target.alphabets), self.target.dim)

    def word(self, word) -> tuple:
        out = []
        for sym in word:
            out.extend(self.symbol_map[sym])
        return tuple(out)

    def __call__(self, v: VectorString) -> VectorString:
        ops = linearize(v, self.source.alphabets)
        return product(word_ops(self.word(op.source for op in ops), self.target.alphabets), self.target.dim)

    @property
    def stretch(self) -> int:
        return max((len(w) for w in self.symbol_map.values()), default=0)


def concurrency_violation(f: VectorSimulation):
    """A commuting pair of source operations whose images do not commute."""
    ops = f.source.ops()
    for a, b in itertools.combinations(sorted(ops), 2):
        if independent(ops[a], ops[b]):
            fa, fb = f.image(a), f.image(b)
            if vconcat(fa, fb) != vconcat(fb, fa):
                return {"pair": [a, b]}
    return None


def vector_simulation_violation(f: VectorSimulation, depth: int | None = None, strong: bool | None = None):
    bad = concurrency_violation(f)
    if bad is not None:
        raise ConcurrencyError(f"images of commuting operations {bad['pair']} do not commute")
    depth = f.source.depth if depth is None else depth
    strong = f.strong if strong is None else strong
    if f.target.depth < f.stretch * depth:
        raise DepthError(f"target depth {f.target.depth} is below {f.stretch * depth}")
    for v in f.source:
        if v.op_count <= depth and f(v) not in f.target.vectors:
            return {"witness": element_name(v), "reason": "image not in target"}
    if strong:
        ops = f.source.ops()
        level = {VectorString.unit(f.source.dim)}
        for _ in range(depth):
            grown = set()
            for v in level:
                for sym, op in ops.items():
                    w = vconcat(v, op)
                    if f(w) not in f.target.vectors:
                        continue
                    if w not in f.source.vectors:
                        return {"witness": element_name(w), "reason": "image in target but vector not in source"}
                    grown.add(w)
            level = grown
    return None


def check_vector_simulation(f: VectorSimulation, depth: int | None = None) -> bool:
    return vector_simulation_violation(f, depth) is None


# ---------------------------------------------------------------------------
# Derivors


@dataclass(frozen=True)
class Derivor:
    """Operator name → term over variables ``x0 .. x(n-1)``."""

    mapping: Mapping

    def __post_init__(self):
        table = {op: parse_term(t) if isinstance(t, str) else t for op, t in dict(self.mapping).items()}
        object.__setattr__(self, "mapping", dict(sorted(table.items())))

    def __hash__(self):
        return hash(tuple(self.mapping.items()))

    def __getitem__(self, op: str):
        try:
            return self.mapping[op]
        except KeyError:
            raise SignatureError(f"derivor has no term for {op!r}") from None

    def ops(self) -> list:
        return list(self.mapping)

    def to_json(self) -> dict:
        return {"map": {op: str(t) for op, t in self.mapping.items()}}

    @classmethod
    def from_json(cls, data: dict) -> Derivor:
        return cls({op: parse_term(t) for op, t in data["map"].items()})


def identity_derivor(signature: Mapping) -> Derivor:
    return Derivor({op: App(op, tuple(Var(i) for i in range(n))) for op, n in signature.items()})


def canonical_identity(A: PartialAlgebra) -> Derivor:
    """``(x0)σ`` on the read-back alphabet of ``A``, ``x0`` elsewhere."""
    alpha = g_alphabet(A)
    table = {EPS: EPS_TERM}
    for sym in symbols_of(A):
        table[sym] = App(sym, (X0,)) if sym in alpha else X0
    return Derivor(table)


def apply_derivor(d: Derivor, t):
    if isinstance(t, Var):
        return t
    return substitute(d[t.op], [apply_derivor(d, a) for a in t.args])


def compose_derivors(outer: Derivor, inner: Derivor) -> Derivor:
    """``(outer ∘ inner)(σ) = outer(inner(σ))``."""
    return Derivor({op: apply_derivor(outer, t) for op, t in inner.mapping.items()})


def _eval_traced(t, A: PartialAlgebra, args):
    """Evaluate ``t`` with variables bound to ``args``. Returns the value (or
    ``None``) and whether evaluation stopped at a frontier element."""
    if isinstance(t, Var):
        return args[t.index], False
    vals = []
    for sub in t.args:
        v, cut = _eval_traced(sub, A, args)
        if v is None:
            return None, cut
        vals.append(v)
    out = A.tables[t.op].get(tuple(vals))
    return out, out is None and any(v in A.frontier for v in vals)


def derived_algebra(d: Derivor, A: PartialAlgebra) -> PartialAlgebra:
    """Same carrier; ``σ`` is interpreted as the term ``d(σ)`` evaluated in
    ``A``. Elements where an evaluation stopped at the frontier of ``A`` join
    the frontier."""
    if set(d.ops()) != set(A.signature):
        raise SignatureError("derivor and algebra cover different operators")
    tables = {}
    frontier = set(A.frontier)
    for op, n in A.signature.items():
        term = d[op]
        if any(i >= n for i in _var_indices(term)):
            raise SignatureError(f"term {term} for {op} uses variables beyond arity {n}")
        for name in _op_names(term):
            if name not in A.signature:
                raise SignatureError(f"term {term} uses unknown operator {name!r}")
        table = {}
        for args in itertools.product(A.carrier, repeat=n):
            v, cut = _eval_traced(term, A, args)
            if v is not None:
                table[args] = v
            elif cut:
                frontier.update(args)
        tables[op] = table
    return PartialAlgebra(A.signature, A.carrier, tables, frontier)


def _var_indices(t) -> set:
    if isinstance(t, Var):
        return {t.index}
    out = set()
    for a in t.args:
        out |= _var_indices(a)
    return out


def _op_names(t) -> set:
    return operators(t)


# ---------------------------------------------------------------------------
# Derived homomorphisms


@dataclass(frozen=True, eq=False)
class DerivedHom:
    derivor: Derivor
    phi: Mapping
    strong: bool = False


def canonical_violation(d: Derivor, A: PartialAlgebra, B: PartialAlgebra):
    """The first of the three canonical restrictions that ``d`` breaks for
    the hom-set ``A → B``, or ``None``."""
    if d[EPS] != EPS_TERM:
        return {"rule": "D1", "reason": "ε must go to ε", "term": str(d[EPS])}
    for op, n in sorted(A.signature.items()):
        if n >= 1 and is_ground(d[op]):
            return {"rule": "D2", "op": op, "reason": "operator sent to a ground term", "term": str(d[op])}
    alpha_a, alpha_b = g_alphabet(A), g_alphabet(B)
    for sym in symbols_of(A):
        t = d[sym]
        if sym in alpha_a:
            stray = operators(t) - set(alpha_b)
            if stray:
                return {"rule": "D3", "op": sym, "reason": f"uses {sorted(stray)} outside the target alphabet", "term": str(t)}
        elif t != X0:
            return {"rule": "D3", "op": sym, "reason": "off-alphabet symbol must go to x0", "term": str(t)}
    return None


def derived_hom_violation(h: DerivedHom, A: PartialAlgebra, B: PartialAlgebra, canonical: bool = False):
    if canonical:
        bad = canonical_violation(h.derivor, A, B)
        if bad is not None:
            return bad
    dB = derived_algebra(h.derivor, B)
    bad = homomorphism_violation(h.phi, A, dB, strong=h.strong)
    if bad is None:
        return None
    out = dict(bad, args=[element_name(a) for a in bad["args"]])
    for key in ("source", "target"):
        if key in out:
            out[key] = element_name(out[key])
    return out


def check_derived_hom(h: DerivedHom, A: PartialAlgebra, B: PartialAlgebra, canonical: bool = False) -> bool:
    return derived_hom_violation(h, A, B, canonical) is None


def identity_derived_hom(A: PartialAlgebra) -> DerivedHom:
    return DerivedHom(canonical_identity(A), {a: a for a in A.carrier}, strong=True)


def compose_derived_homs(first: DerivedHom, second: DerivedHom) -> DerivedHom:
    """``second ∘ first`` for ``first: A → B`` and ``second: B → C``."""
    phi = {a: second.phi[b] for a, b in first.phi.items()}
    return DerivedHom(compose_derivors(second.derivor, first.derivor), phi, first.strong and second.strong)


def derivors_agree(d1: Derivor, d2: Derivor, A: PartialAlgebra) -> bool:
    """Extensional equality on the hom-set out of ``A``: the same term on
    the read-back alphabet of ``A`` and on ε, ``x0`` elsewhere for both."""
    alpha = g_alphabet(A)
    if d1[EPS] != d2[EPS]:
        return False
    for sym in symbols_of(A):
        if sym in alpha:
            if d1[sym] != d2[sym]:
                return False
        elif d1[sym] != X0 or d2[sym] != X0:
            return False
    return True


def derived_hom_difference(h1: DerivedHom, h2: DerivedHom, A: PartialAlgebra):
    if not derivors_agree(h1.derivor, h2.derivor, A):
        for op in sorted(A.signature):
            if h1.derivor[op] != h2.derivor[op]:
                return {"reason": "derivors differ", "op": op, "left": str(h1.derivor[op]), "right": str(h2.derivor[op])}
        return {"reason": "derivors differ off the alphabet"}
    for a in sorted(A.carrier, key=element_name):
        if h1.phi.get(a) != h2.phi.get(a):
            show = lambda v: None if v is None else element_name(v)
            return {"reason": "maps differ", "witness": element_name(a), "left": show(h1.phi.get(a)), "right": show(h2.phi.get(a))}
    return None


# ---------------------------------------------------------------------------
# Functors on morphisms


def spine_derivor(symbol_map: Mapping, alphabet, symbols) -> Derivor:
    """ε ↦ ε; ``σ`` in ``alphabet`` ↦ the spine over ``x0`` spelling its
    image; every other symbol ↦ ``x0``."""
    table = {EPS: EPS_TERM}
    for sym in symbols:
        table[sym] = spine(symbol_map[sym], X0) if sym in alphabet else X0
    return Derivor(table)


def functor_F_on_morphism(f: Simulation, sigma=None):
    """The canonical derived homomorphism ``F(source) → F(target)`` induced
    by ``f``; returns ``(hom, F(source), F(target))``."""
    symbols = sorted(set(sigma or ()) | f.source.alphabet | f.target.alphabet)
    _require_target_depth(f, f.source.depth)
    A = language_to_algebra(f.source, symbols)
    B = language_to_algebra(f.target, symbols)
    d = spine_derivor(f.symbol_map, f.source.alphabet, symbols)
    phi = unique_hom_from_fg(A, derived_algebra(d, B))
    if phi is None:
        raise MapError("symbol map is not a simulation: no homomorphism into the derived algebra")
    return DerivedHom(d, phi, f.strong), A, B


def functor_F_prime_on_morphism(f: VectorSimulation, sigma=None):
    """As ``functor_F_on_morphism`` for vector simulations; the underlying
    algebras are the vector algebras."""
    symbols = sorted(set(sigma or ()) | f.source.union_alphabet | f.target.union_alphabet)
    if f.target.depth < f.stretch * f.source.depth:
        raise DepthError("target too shallow for the source depth")
    A = vector_language_to_algebra(f.source, symbols)
    B = vector_language_to_algebra(f.target, symbols)
    d = spine_derivor(f.symbol_map, f.source.union_alphabet, symbols)
    phi = unique_hom_from_fg(A, derived_algebra(d, B))
    if phi is None:
        raise MapError("symbol map is not a simulation: no homomorphism into the derived algebra")
    return DerivedHom(d, phi, f.strong), A, B


def read_derivor(d: Derivor, A: PartialAlgebra, B: PartialAlgebra | None = None) -> dict:
    """The word each symbol of the read-back alphabet of ``A`` is sent to."""
    if B is not None:
        bad = canonical_violation(d, A, B)
        if bad is not None:
            raise CanonicalError(f"{bad['rule']}: {bad['reason']}")
    out = {}
    for sym in sorted(g_alphabet(A)):
        read = read_spine(d[sym])
        if read is None or read[0] != X0:
            raise CanonicalError(f"term {d[sym]} for {sym} is not a spine over x0")
        out[sym] = read[1]
    return out


def functor_G_on_morphism(h: DerivedHom, A: PartialAlgebra, B: PartialAlgebra, depth: int,
                          target_depth: int | None = None) -> Simulation:
    """The simulation ``G(A) → G(B)`` read off the spines of the derivor;
    ``φ`` plays no part."""
    table = read_derivor(h.derivor, A, B)
    stretch = max((len(w) for w in table.values()), default=0)
    if target_depth is None:
        target_depth = max(stretch * depth, depth)
    return Simulation(algebra_to_language(A, depth), algebra_to_language(B, target_depth), table, h.strong)


def evaluation_hom(A: PartialAlgebra, depth: int):
    """``g_A``: the evaluation map ``F(G(A)) → A`` with its source algebra."""
    source = language_to_algebra(algebra_to_language(A, depth), symbols_of(A))
    return evaluation_map(A, algebra_to_language(A, depth)), source


def counit(A: PartialAlgebra, depth: int):
    """``(Id_A, g_A) : F(G(A)) → A`` together with ``F(G(A))``."""
    g, source = evaluation_hom(A, depth)
    return DerivedHom(canonical_identity(A), g, strong=True), source


# ---------------------------------------------------------------------------
# Naturality and the adjunction


def check_naturality(h: DerivedHom, A: PartialAlgebra, B: PartialAlgebra, depth: int) -> CheckReport:
    """Compare ``(Id_B, g_B) ∘ FG(h)`` with ``h ∘ (Id_A, g_A)`` as derived
    homomorphisms out of ``F(G(A))``."""
    desc = f"{A!r} -> {B!r}"
    bad = derived_hom_violation(h, A, B, canonical=True)
    if bad is not None:
        return CheckReport("NATURALITY", False, depth, desc, dict(bad, reason="input: " + bad.get("reason", "")))
    f = functor_G_on_morphism(h, A, B, depth)
    fg_h, FGA, FGB = functor_F_on_morphism(f, symbols_of(A))
    counit_a, _ = counit(A, depth)
    counit_b, _ = counit(B, f.target.depth)
    left = compose_derived_homs(fg_h, counit_b)
    right = compose_derived_homs(counit_a, h)
    diff = derived_hom_difference(left, right, FGA)
    if diff is None:
        for leg, hom in (("left", left), ("right", right)):
            bad = derived_hom_violation(hom, FGA, B, canonical=True)
            if bad is not None:
                diff = dict(bad, leg=leg)
                break
    return CheckReport("NATURALITY", diff is None, depth, desc, diff)


def adjunct(f: Simulation, A: PartialAlgebra):
    """The derived homomorphism ``F(L) → A`` whose reading is ``f``."""
    symbols = symbols_of(A)
    L = f.source
    FL = language_to_algebra(L, symbols)
    d = spine_derivor(f.symbol_map, L.alphabet, symbols)
    phi = unique_hom_from_fg(FL, derived_algebra(d, A))
    return (None if phi is None else DerivedHom(d, phi, f.strong)), FL


def _spines(alphabet, bound: int):
    for n in range(bound + 1):
        for word in itertools.product(sorted(alphabet), repeat=n):
            yield word


def check_adjunction(L: PrefixLanguage, A: PartialAlgebra, f: Simulation, depth: int | None = None,
                     search_bound: int | None = None) -> CheckReport:
    """Build the adjunct ``(d, φ) : F(L) → A`` of ``f : L → G(A)`` and check
    both triangles, then search every canonical derivor with spines of
    length at most ``search_bound`` for another solution."""
    depth = L.depth if depth is None else depth
    if search_bound is None:
        search_bound = f.stretch + 1
    desc = f"{L!r} -> G({A!r})"
    if f.source != L:
        raise MapError("simulation does not start at the given language")
    expected_target = algebra_to_language(A, f.target.depth)
    if f.target != expected_target:
        raise MapError("simulation target is not the read-back language of the algebra")
    bad = simulation_violation(f, depth, strong=False)
    if bad is not None:
        raise MapError(f"not a simulation: {bad['reason']} at {bad['witness']}")

    def fail(reason, **extra):
        return CheckReport("ADJUNCTION", False, depth, desc, dict(extra, reason=reason))

    h, FL = adjunct(f, A)
    if h is None:
        return fail("no homomorphism for the constructed derivor")
    bad = derived_hom_violation(h, FL, A, canonical=True)
    if bad is not None:
        return fail("constructed pair is not canonical", **bad)

    # upper triangle: G(d, φ) after the unit 1_L is f
    read = read_derivor(h.derivor, FL, A)
    if read != f.symbol_map:
        return fail("reading of the derivor differs from f", left=str(read), right=str(f.symbol_map))

    # lower triangle: (Id_A, g_A) after F(f) is (d, φ)
    Ff, _, _ = functor_F_on_morphism(f, symbols_of(A))
    counit_a, _ = counit(A, f.target.depth)
    composite = compose_derived_homs(Ff, counit_a)
    diff = derived_hom_difference(composite, h, FL)
    if diff is not None:
        return fail("lower triangle does not commute", **diff)

    # uniqueness: per symbol, spines passing the upper triangle; then every
    # combination of survivors is tested for a homomorphism
    alpha_a = sorted(g_alphabet(A))
    per_symbol = {}
    for sym in sorted(L.alphabet):
        candidates = [w for w in _spines(alpha_a, search_bound)]
        per_symbol[sym] = [w for w in candidates if w == f.symbol_map[sym]]
    solutions = []
    symbols = symbols_of(A)
    for choice in itertools.product(*(per_symbol[s] for s in sorted(L.alphabet))):
        table = dict(zip(sorted(L.alphabet), choice))
        d = spine_derivor(table, L.alphabet, symbols)
        phi = unique_hom_from_fg(FL, derived_algebra(d, A))
        if phi is not None and canonical_violation(d, FL, A) is None:
            solutions.append(d)
    total = {s: sum(1 for _ in _spines(alpha_a, search_bound)) for s in sorted(L.alphabet)}
    details = {
        "search_bound": search_bound,
        "candidates_per_symbol": total,
        "solutions": len(solutions),
    }
    if len(solutions) != 1:
        return CheckReport("ADJUNCTION", False, depth, desc,
                           {"reason": f"{len(solutions)} canonical solutions within the bound"}, details)
    return CheckReport("ADJUNCTION", True, depth, desc, None, details)


def check_f_prime_square(f: VectorSimulation, depth: int | None = None) -> CheckReport:
    """``h_{L'} ∘ GUF'(f) = f ∘ h_L`` pointwise on the traces of ``G(F(L))``
    up to ``depth``."""
    L, L2 = f.source, f.target
    depth = L.depth if depth is None else depth
    desc = f"{L!r} -> {L2!r}"
    hom, A, B = functor_F_prime_on_morphism(f)
    top = read_derivor(hom.derivor, A, B)
    GA = algebra_to_language(A, depth)
    for t in sorted(GA.traces, key=len):
        down_right = product(word_ops(_apply_map(top, t), L2.alphabets), L2.dim)
        h_of_t = product(word_ops(t, L.alphabets), L.dim)
        right_down = f(h_of_t)
        if down_right != right_down:
            return CheckReport("FPRIME_SQUARE", False, depth, desc, {
                "witness": render_trace(t, GA.alphabet, "ε"),
                "left": element_name(down_right),
                "right": element_name(right_down),
            })
    return CheckReport("FPRIME_SQUARE", True, depth, desc, None)


def _apply_map(table: Mapping, word) -> tuple:
    out = []
    for sym in word:
        out.extend(table.get(sym, ()))
    return tuple(out)


def _adjunction_check(inst: dict, depth=None) -> CheckReport:
    f = inst["simulation"]
    return check_adjunction(inst["language"], inst["algebra"], f, depth, inst.get("search_bound"))


def _naturality_check(inst: dict, depth=None) -> CheckReport:
    return check_naturality(inst["hom"], inst["source"], inst["target"], 2 if depth is None else depth)


def _f_prime_check(inst: dict, depth=None) -> CheckReport:
    return check_f_prime_square(inst["vector_simulation"], depth)


def _derived_hom_check(inst: dict, depth=None) -> CheckReport:
    h, A, B = inst["hom"], inst["source"], inst["target"]
    bad = derived_hom_violation(h, A, B, inst.get("canonical", False))
    desc = f"{A!r} -> {B!r}"
    return CheckReport("DERIVED_HOM", bad is None, 0 if depth is None else depth, desc, bad)


register_check("ADJUNCTION", _adjunction_check)
register_check("DERIVED_HOM", _derived_hom_check)
register_check("NATURALITY", _naturality_check)
register_check("FPRIME_SQUARE", _f_prime_check)
