from hypothesis import strategies as st

from landin.traces import PrefixLanguage

SYMBOLS = "abcd"


@st.composite
def alphabets(draw, min_size=0, max_size=3):
    return frozenset(draw(st.sets(st.sampled_from(SYMBOLS), min_size=min_size, max_size=max_size)))


@st.composite
def languages(draw, alphabet=None, depth=None, max_depth=4):
    if alphabet is None:
        alphabet = draw(alphabets())
    if depth is None:
        depth = draw(st.integers(0, max_depth))
    seeds = []
    if alphabet:
        word = st.lists(st.sampled_from(sorted(alphabet)), max_size=depth).map(tuple)
        seeds = draw(st.lists(word, max_size=4))
    return PrefixLanguage.of(alphabet, seeds, depth)


@st.composite
def part_lists(draw, min_parts=1, max_parts=3, max_depth=3):
    depth = draw(st.integers(0, max_depth))
    n = draw(st.integers(min_parts, max_parts))
    return [draw(languages(depth=depth)) for _ in range(n)], depth


def as_pairs(parts):
    return [(set(p.alphabet), set(p.traces)) for p in parts]


@st.composite
def unary_algebras(draw, symbols="ab", max_size=4):
    """Carrier ``0..n-1`` with ε = 0 and arbitrary partial unary tables."""
    from landin.algebra import PartialAlgebra, language_signature

    n = draw(st.integers(1, max_size))
    tables = {"ε": {(): 0}}
    for sym in symbols:
        entries = draw(st.dictionaries(st.integers(0, n - 1), st.integers(0, n - 1), max_size=n))
        tables[sym] = {(a,): b for a, b in entries.items()}
    return PartialAlgebra(language_signature(symbols), range(n), tables)


def as_tables(A):
    """``(carrier, tables)`` in the plain form the oracles use."""
    return set(A.carrier), {op: dict(t) for op, t in A.tables.items()}


@st.composite
def simulations(draw, source=None, alphabet="abcd", extra=True):
    """A simulation out of ``source`` (drawn if absent) into a language
    built to contain every image, plus a few unrelated traces."""
    from landin.category import Simulation
    from landin.traces import PrefixLanguage

    if source is None:
        source = draw(languages(depth=draw(st.integers(0, 2))))
    target_alpha = frozenset(draw(st.sets(st.sampled_from(alphabet), min_size=1, max_size=3)))
    word = st.lists(st.sampled_from(sorted(target_alpha)), max_size=2).map(tuple)
    table = {s: draw(word) for s in sorted(source.alphabet)}
    stretch = max((len(w) for w in table.values()), default=0)
    depth = max(stretch * source.depth, source.depth)
    images = [tuple(x for s in t for x in table[s]) for t in source.traces]
    if extra:
        images += draw(st.lists(st.lists(st.sampled_from(sorted(target_alpha)), max_size=depth).map(tuple), max_size=2))
    target = PrefixLanguage.of(target_alpha, images, depth)
    return Simulation(source, target, table)
