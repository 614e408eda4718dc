"""Seeded random instances for the correspondence checks.

Every generator takes a ``random.Random`` so that a seed fixes the whole
suite. Sizes follow ``GeneratorConfig``: at most five symbols, three
components and depth six by default.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import (
    Congruence,
    PartialAlgebra,
    algebraic_closure,
    check_congruence,
    language_signature,
    subdirect_violation,
    unique_hom_from_fg,
)
from .category import (
    DerivedHom,
    Simulation,
    VectorSimulation,
    derived_algebra,
    simulation_violation,
    spine_derivor,
    vector_simulation_violation,
)
from .correspondence import (
    CHECKS,
    DecomposedAlgebra,
    algebra_to_language,
    decomposed_to_vector_language,
    g_alphabet,
    language_to_algebra,
    run_check,
    symbols_of,
)
from .errors import ConcurrencyError, DepthError
from .terms import EPS
from .traces import EPSILON, PrefixLanguage
from .vectors import VectorString, product, vfs, vops

SYMBOLS = "abcde"


@dataclass(frozen=True)
class GeneratorConfig:
    max_symbols: int = 5
    max_components: int = 3
    max_depth: int = 6
    growth_steps: int = 8
    max_part_alphabet: int = 3


def random_language(rng: random.Random, alphabet, depth: int, steps: int = 8) -> PrefixLanguage:
    """A random prefix tree: each step extends a random trace (shorter than
    ``depth``) by a random symbol."""
    alphabet = sorted(alphabet)
    traces = {EPSILON}
    if alphabet and depth > 0:
        for _ in range(rng.randint(0, steps)):
            base = rng.choice(sorted(t for t in traces if len(t) < depth))
            traces.add(base + (rng.choice(alphabet),))
    return PrefixLanguage(alphabet, traces, depth)


def random_parts(rng: random.Random, cfg: GeneratorConfig = GeneratorConfig(), mode: str = "random",
                 components: int | None = None, depth: int | None = None):
    """Component languages plus the global symbol list and depth.

    ``mode`` is ``random`` (independent sub-alphabets), ``equal`` (one shared
    alphabet) or ``disjoint`` (pairwise disjoint alphabets)."""
    n = components or rng.randint(2, cfg.max_components)
    depth = rng.randint(1, cfg.max_depth) if depth is None else depth
    if mode == "disjoint":
        size = rng.randint(n, cfg.max_symbols)
        sigma = list(SYMBOLS[:size])
        shuffled = sigma[:]
        rng.shuffle(shuffled)
        alphabets = [[] for _ in range(n)]
        for i, sym in enumerate(shuffled):
            alphabets[i % n].append(sym)
    else:
        size = rng.randint(2, cfg.max_symbols)
        sigma = list(SYMBOLS[:size])
        if mode == "equal":
            common = rng.sample(sigma, rng.randint(1, min(cfg.max_part_alphabet, size)))
            alphabets = [common] * n
        else:
            alphabets = [rng.sample(sigma, rng.randint(1, min(cfg.max_part_alphabet, size))) for _ in range(n)]
    parts = [random_language(rng, a, depth, cfg.growth_steps) for a in alphabets]
    return parts, sigma, depth


def random_algebra(rng: random.Random, symbols, size: int | None = None, density: float | None = None) -> PartialAlgebra:
    """Carrier ``0..size-1`` with ``ε = 0`` and random partial unary maps."""
    size = rng.randint(1, 4) if size is None else size
    density = rng.choice([0.4, 0.6, 0.8, 1.0]) if density is None else density
    tables = {EPS: {(): 0}}
    for sym in symbols:
        tables[sym] = {(a,): rng.randrange(size) for a in range(size) if rng.random() < density}
    return PartialAlgebra(language_signature(symbols), range(size), tables)


def random_fg_algebra(rng: random.Random, symbols, size: int | None = None) -> PartialAlgebra:
    return algebraic_closure(random_algebra(rng, symbols, size))


def random_partition(rng: random.Random, carrier) -> Congruence:
    elements = sorted(carrier)
    blocks: list = []
    for e in elements:
        if blocks and rng.random() < 0.5:
            rng.choice(blocks).add(e)
        else:
            blocks.append({e})
    return Congruence(frozenset(frozenset(b) for b in blocks))


def random_congruence(rng: random.Random, A: PartialAlgebra, tries: int = 20) -> Congruence:
    for _ in range(tries):
        theta = random_partition(rng, A.carrier)
        if check_congruence(theta, A):
            return theta
    return Congruence.identity(A.carrier)


def random_decomposed(rng: random.Random, symbols) -> DecomposedAlgebra:
    """A random algebra with the identity congruence and, usually, a second
    random congruence; the identity member makes the family subdirect."""
    A = random_algebra(rng, symbols)
    thetas = [Congruence.identity(A.carrier)]
    if rng.random() < 0.7:
        thetas.append(random_congruence(rng, A))
        rng.shuffle(thetas)
    return DecomposedAlgebra(A, thetas)


def _small_symbols(rng: random.Random) -> list:
    return list(SYMBOLS[: rng.randint(1, 3)])


def _largest_depth(size_at, limit: int, cap: int = 6) -> int:
    """Largest ``k <= cap`` whose read-back has at most ``limit`` elements."""
    best = 0
    for k in range(cap + 1):
        if size_at(k) > limit:
            break
        best = k
    return best


def _algebra_family(rng: random.Random, cfg: GeneratorConfig, count: int):
    """Factors for product checks: half the time algebras of random
    languages, otherwise arbitrary random algebras."""
    if rng.random() < 0.5:
        parts, sigma, depth = random_parts(rng, cfg, components=count, depth=rng.randint(1, 4))
        return [language_to_algebra(p, sigma, truncated=False) for p in parts], depth
    symbols = _small_symbols(rng)
    return [random_algebra(rng, symbols) for _ in range(count)], rng.randint(1, 4)


def instance_for(check_id: str, rng: random.Random, cfg: GeneratorConfig = GeneratorConfig()):
    """A random ``(instance, depth)`` pair shaped for ``check_id``."""
    if check_id in ("CHARTH", "COROLLARY", "VECCORRTH_I", "LEMM4", "LEMM5", "LEMM6", "PARALLEL_TO_VFS"):
        parts, sigma, depth = random_parts(rng, cfg)
        return {"parts": parts, "sigma": sigma}, depth
    if check_id in ("CORRTH_I", "LEMM1"):
        parts, sigma, depth = random_parts(rng, cfg, components=1)
        return {"language": parts[0], "sigma": sigma}, depth
    if check_id in ("CORRTH_II", "CORRTH_III"):
        symbols = _small_symbols(rng)
        A = random_algebra(rng, symbols)
        if check_id == "CORRTH_II":
            depth = _largest_depth(lambda k: len(algebra_to_language(A, k)), 4)
        else:
            depth = rng.randint(1, 5)
        return {"algebra": A}, depth
    if check_id in ("CORRTH_IV", "LEMM2"):
        algebras, depth = _algebra_family(rng, cfg, rng.randint(2, 3))
        return {"algebras": algebras}, depth
    if check_id == "LEMM3":
        parts, sigma, depth = random_parts(rng, cfg, components=1)
        algebras, _ = _algebra_family(rng, cfg, rng.randint(2, 3))
        return {"language": parts[0], "sigma": sigma, "algebras": algebras}, depth
    if check_id in ("VECCORRTH_II", "VECCORRTH_III", "VECCORRTH_IV"):
        if rng.random() < 0.5:
            parts, sigma, depth = random_parts(rng, cfg, depth=rng.randint(1, 4))
            inst = {"parts": parts, "sigma": sigma}
            if check_id == "VECCORRTH_II":
                from .correspondence import _decomposed

                D, _ = _decomposed(inst, depth)
                inst = {"decomposed": D}
        else:
            inst = {"decomposed": random_decomposed(rng, _small_symbols(rng))}
            depth = rng.randint(1, 4)
        if check_id == "VECCORRTH_II":
            D = inst["decomposed"]
            depth = _largest_depth(lambda k: len(decomposed_to_vector_language(D, k)), 4)
        return inst, depth
    if check_id == "ADJUNCTION":
        return adjunction_instance(rng)
    if check_id == "NATURALITY":
        return naturality_instance(rng)
    if check_id == "DERIVED_HOM":
        inst, depth = naturality_instance(rng)
        return dict(inst, canonical=True), depth
    if check_id == "FPRIME_SQUARE":
        return f_prime_instance(rng, cfg)
    raise KeyError(check_id)


def _random_word(rng: random.Random, alphabet, longest: int) -> tuple:
    alphabet = sorted(alphabet)
    if not alphabet:
        return ()
    return tuple(rng.choice(alphabet) for _ in range(rng.randint(0, longest)))


def adjunction_instance(rng: random.Random, tries: int = 100):
    """``(L, A, f)`` with ``f : L → G(A)`` a simulation."""
    symbols = list(SYMBOLS[: rng.randint(2, 3)])
    depth = rng.randint(1, 3)
    L = random_language(rng, rng.sample(symbols, rng.randint(1, len(symbols))), depth, 6)
    if rng.random() < 0.5:
        A = random_fg_algebra(rng, symbols)
    else:
        A = language_to_algebra(random_language(rng, symbols, 6, 8), symbols, truncated=False)
    alpha = g_alphabet(A)
    target_full = algebra_to_language(A, 2 * depth)
    for attempt in range(tries + 1):
        if attempt == tries:
            table = {s: () for s in L.alphabet}
        else:
            table = {s: _random_word(rng, alpha, 2) for s in L.alphabet}
        stretch = max((len(w) for w in table.values()), default=0)
        target = target_full.truncate(max(stretch * depth, depth))
        f = Simulation(L, target, table)
        if simulation_violation(f, depth, strong=False) is None:
            return {"language": L, "algebra": A, "simulation": f}, depth
    raise AssertionError("unreachable")


def naturality_instance(rng: random.Random, tries: int = 100):
    """A canonical derived homomorphism between finitely generated algebras."""
    symbols = list(SYMBOLS[: rng.randint(2, 3)])
    depth = rng.randint(1, 3)

    def pick():
        if rng.random() < 0.5:
            return random_fg_algebra(rng, symbols)
        return language_to_algebra(random_language(rng, symbols, 6, 6), symbols, truncated=False)

    A, B = pick(), pick()
    alpha_a, alpha_b = g_alphabet(A), g_alphabet(B)
    for _ in range(tries):
        table = {s: _random_word(rng, alpha_b, 2) for s in alpha_a}
        d = spine_derivor(table, alpha_a, symbols)
        dB = derived_algebra(d, B)
        phi = unique_hom_from_fg(A, dB)
        if phi is not None:
            from .algebra import check_homomorphism

            return {"hom": DerivedHom(d, phi, check_homomorphism(phi, A, dB, strong=True)),
                    "source": A, "target": B}, depth
    table = {s: (s,) for s in alpha_a}
    d = spine_derivor(table, alpha_a, symbols)
    return {"hom": DerivedHom(d, {a: a for a in A.carrier}, True), "source": A, "target": A}, depth


def f_prime_instance(rng: random.Random, cfg: GeneratorConfig = GeneratorConfig(), tries: int = 200):
    """A concurrency-preserving simulation between two vector languages."""
    small = GeneratorConfig(max_symbols=4, max_components=2, max_depth=3, growth_steps=5)
    parts, sigma, depth = random_parts(rng, small, components=2, depth=rng.randint(1, 3))
    L = vfs(parts, depth)
    parts2, _, _ = random_parts(rng, small, components=2, depth=2 * depth)
    L2 = vfs(parts2, 2 * depth)
    for _ in range(tries):
        table = {s: _random_word(rng, L2.union_alphabet, 2) for s in L.union_alphabet}
        try:
            f = VectorSimulation(L, L2, table)
            if vector_simulation_violation(f, depth, strong=False) is None:
                return {"vector_simulation": f}, depth
        except ConcurrencyError:
            continue
    f = VectorSimulation(L, L, {s: (s,) for s in L.union_alphabet}, strong=True)
    return {"vector_simulation": f}, depth


def random_vops_word(rng: random.Random, alphabets, longest: int = 8) -> list:
    ops = list(vops(alphabets).values())
    return [rng.choice(ops) for _ in range(rng.randint(0, longest))]


def random_alphabet_vector(rng: random.Random, cfg: GeneratorConfig = GeneratorConfig()) -> tuple:
    size = rng.randint(2, cfg.max_symbols)
    sigma = list(SYMBOLS[:size])
    n = rng.randint(2, cfg.max_components)
    while True:
        alphabets = tuple(frozenset(rng.sample(sigma, rng.randint(1, min(3, size)))) for _ in range(n))
        if frozenset().union(*alphabets):
            return alphabets


def random_vfs_member(rng: random.Random, cfg: GeneratorConfig = GeneratorConfig()):
    """Random parts and a random vector of their firing sequences."""
    parts, sigma, depth = random_parts(rng, cfg)
    L = vfs(parts, depth)
    v = rng.choice(sorted(L.vectors, key=VectorString.sort_key))
    return parts, depth, v


def suite_ids() -> list:
    return sorted(CHECKS)


def run_suite(seed: int, instances: int, check_ids=None, cfg: GeneratorConfig = GeneratorConfig()) -> list:
    """Reports for ``instances`` seeded instances of every requested check,
    in check-id order."""
    reports = []
    for check_id in check_ids or suite_ids():
        rng = random.Random(f"{seed}:{check_id}")
        for _ in range(instances):
            inst, depth = instance_for(check_id, rng, cfg)
            reports.append(run_check(check_id, inst, depth))
    return reports
