"""Vectors of traces, the vector-operation monoid and vector firing sequences.

Vector operations over an alphabet vector ``(A1, ..., An)`` send a symbol
``s`` to the tuple whose i-th entry is ``(s,)`` if ``s`` is in ``Ai`` and
the empty trace otherwise. Products are componentwise concatenations; two
distinct operations with disjoint supports commute.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, EmptyLanguageError, LimitError, SymbolError
from .traces import (
    EPSILON,
    EPSILON_NAME,
    PrefixLanguage,
    _check_parts,
    _spaced,
    parse_trace,
    render_trace,
)

CLASS_LIMIT = 10


def alphabet_vector(components) -> tuple:
    av = tuple(frozenset(c) for c in components)
    if not av:
        raise DimensionError("an alphabet vector needs at least one component")
    return av


@dataclass(frozen=True)
class VectorString:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(tuple(p) for p in self.parts))

    @classmethod
    def unit(cls, n: int) -> VectorString:
        return cls((EPSILON,) * n)

    @property
    def dim(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __mul__(self, other: VectorString) -> VectorString:
        return vconcat(self, other)

    @property
    def op_count(self) -> int:
        """Number of vector operations in any factorisation of this vector.

        A symbol occurs equally often in every component that contains it, so
        the first component where it appears gives its multiplicity."""
        seen: dict = {}
        for part in self.parts:
            counts: dict = {}
            for sym in part:
                counts[sym] = counts.get(sym, 0) + 1
            for sym, c in counts.items():
                seen.setdefault(sym, c)
        return sum(seen.values())

    def sort_key(self):
        return (self.op_count, tuple((len(p), p) for p in self.parts))

    def render(self, alphabet=None, empty: str = EPSILON_NAME) -> str:
        syms = alphabet if alphabet is not None else {s for p in self.parts for s in p}
        return "(" + ",".join(render_trace(p, syms, empty) for p in self.parts) + ")"

    def __repr__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class VectorOp:
    """The vector operation induced by ``source``; equality is by parts."""

    source: str
    parts: tuple

    @property
    def dim(self) -> int:
        return len(self.parts)

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, p in enumerate(self.parts) if p)

    def as_vector(self) -> VectorString:
        return VectorString(self.parts)

    def __repr__(self) -> str:
        return f"{self.source}̲{VectorString(self.parts).render()}"


def vop(symbol: str, alphabets) -> VectorOp:
    parts = tuple((symbol,) if symbol in a else EPSILON for a in alphabets)
    if not any(parts):
        raise SymbolError(f"{symbol!r} is in no component alphabet")
    return VectorOp(symbol, parts)


def vops(alphabets) -> dict:
    """One vector operation per symbol of the union alphabet, keyed by symbol."""
    alphabets = alphabet_vector(alphabets)
    union = sorted(frozenset().union(*alphabets))
    return {sym: vop(sym, alphabets) for sym in union}


def _as_vector(x) -> VectorString:
    if isinstance(x, VectorOp):
        return x.as_vector()
    return x


def vconcat(s, t) -> VectorString:
    s, t = _as_vector(s), _as_vector(t)
    if s.dim != t.dim:
        raise DimensionError(f"cannot concatenate vectors of dimension {s.dim} and {t.dim}")
    return VectorString(tuple(a + b for a, b in zip(s.parts, t.parts)))


def product(ops: Sequence[VectorOp], dim: int | None = None) -> VectorString:
    if dim is None:
        if not ops:
            raise DimensionError("the empty product needs an explicit dimension")
        dim = ops[0].dim
    out = VectorString.unit(dim)
    for op in ops:
        out = vconcat(out, op)
    return out


def _same_dim(*ops):
    dims = {op.dim for op in ops}
    if len(dims) > 1:
        raise DimensionError(f"mixed dimensions {sorted(dims)}")


def independent(a: VectorOp, b: VectorOp) -> bool:
    """True when each operation is non-empty only where the other is empty."""
    _same_dim(a, b)
    return a != b and not (a.support & b.support)


def monoid_equal(u: Sequence[VectorOp], v: Sequence[VectorOp]) -> bool:
    _same_dim(*u, *v)
    if not u and not v:
        return True
    dim = (u or v)[0].dim
    return product(u, dim) == product(v, dim)


def _word_key(ops) -> tuple:
    return tuple(op.source for op in ops)


def normal_form(u: Sequence[VectorOp]) -> list:
    """Lexicographically least member (by symbol name) of the commutation
    class of ``u``: repeatedly take the least operation that can be moved to
    the front."""
    _same_dim(*u)
    rest = list(u)
    out = []
    while rest:
        best = None
        for j, op in enumerate(rest):
            if best is not None and op.source >= rest[best].source:
                continue
            if all(independent(op, rest[k]) for k in range(j)):
                best = j
        out.append(rest.pop(best))
    return out


def commutation_class(u: Sequence[VectorOp], limit: int = CLASS_LIMIT) -> set:
    """All sequences reachable from ``u`` by swapping adjacent independent
    operations. Refuses inputs longer than ``limit``."""
    u = tuple(u)
    if len(u) > limit:
        raise LimitError(f"sequence of length {len(u)} exceeds the commutation-class limit {limit}")
    _same_dim(*u)
    seen = {u}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            if independent(w[i], w[i + 1]):
                swapped = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                if swapped not in seen:
                    seen.add(swapped)
                    queue.append(swapped)
    return seen


def last_ops(v: VectorString, alphabets) -> list:
    """Operations that can end a factorisation of ``v``."""
    out = []
    for sym, op in vops(alphabets).items():
        if all(v.parts[i] and v.parts[i][-1] == sym for i in op.support):
            out.append(op)
    return out


def strip_last(v: VectorString, op: VectorOp) -> VectorString:
    return VectorString(tuple(p[:-1] if i in op.support else p for i, p in enumerate(v.parts)))


def linearize(v: VectorString, alphabets) -> list:
    """The normal-form factorisation of ``v`` into vector operations."""
    ops = []
    while any(v.parts):
        candidates = last_ops(v, alphabets)
        if not candidates:
            raise SymbolError(f"{v!r} is not a product of vector operations")
        ops.append(candidates[0])
        v = strip_last(v, candidates[0])
    ops.reverse()
    return normal_form(ops)


def word_ops(word, alphabets) -> list:
    """Vector operations for a word of symbols."""
    table = vops(alphabets)
    return [table[sym] for sym in word]


@dataclass(frozen=True)
class VectorLanguage:
    """A nonempty set of vector-operation products closed under removing a
    final operation, exact up to ``depth`` operations."""

    alphabets: tuple
    vectors: frozenset
    depth: int

    def __post_init__(self):
        object.__setattr__(self, "alphabets", alphabet_vector(self.alphabets))
        object.__setattr__(self, "vectors", frozenset(self.vectors))
        n = len(self.alphabets)
        if not self.vectors:
            raise EmptyLanguageError("a vector language must contain the unit vector")
        if VectorString.unit(n) not in self.vectors:
            raise EmptyLanguageError("unit vector missing")
        for v in self.vectors:
            if v.dim != n:
                raise DimensionError(f"{v!r} has dimension {v.dim}, expected {n}")
            for part, alpha in zip(v.parts, self.alphabets):
                if set(part) - alpha:
                    raise SymbolError(f"{v!r} uses symbols outside its component alphabet")
            if not any(v.parts):
                continue
            ends = last_ops(v, self.alphabets)
            if not ends:
                raise SymbolError(f"{v!r} is not a product of vector operations")
            for op in ends:
                if strip_last(v, op) not in self.vectors:
                    raise EmptyLanguageError(f"vector language not prefix-closed at {v!r}")
            if v.op_count > self.depth:
                raise DimensionError(f"{v!r} is longer than depth {self.depth}")

    @property
    def dim(self) -> int:
        return len(self.alphabets)

    @property
    def union_alphabet(self) -> frozenset:
        return frozenset().union(*self.alphabets)

    def ops(self) -> dict:
        return vops(self.alphabets)

    def __contains__(self, v) -> bool:
        return v in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(sorted(self.vectors, key=VectorString.sort_key))

    def to_json(self) -> dict:
        union = self.union_alphabet
        return {
            "alphabets": [sorted(a) for a in self.alphabets],
            "depth": self.depth,
            "vectors": [[render_trace(p, union) for p in v.parts] for v in self],
        }

    @classmethod
    def from_json(cls, data: dict) -> VectorLanguage:
        alphabets = alphabet_vector(data["alphabets"])
        union = frozenset().union(*alphabets)
        vectors = [VectorString(tuple(parse_trace(p, union) for p in v)) for v in data["vectors"]]
        return cls(alphabets, vectors, int(data["depth"]))

    def __repr__(self) -> str:
        union = self.union_alphabet
        body = ", ".join(v.render(union) for v in self)
        return f"VectorLanguage({[sorted(a) for a in self.alphabets]}, {{{body}}}, depth={self.depth})"


def vfs(parts: Sequence[PrefixLanguage], depth: int | None = None) -> VectorLanguage:
    """Vector firing sequences: products of at most ``depth`` vector
    operations whose every component is a trace of the matching part."""
    parts = list(parts)
    if depth is None:
        depth = min(p.depth for p in parts) if parts else 0
    _check_parts(parts, depth)
    alphabets = tuple(p.alphabet for p in parts)
    ops = list(vops(alphabets).values())
    unit = VectorString.unit(len(parts))
    accepted = {unit}
    level = [unit]
    for _ in range(depth):
        grown = set()
        for v in level:
            for op in ops:
                w = vconcat(v, op)
                if w not in accepted and all(w.parts[i] in parts[i].traces for i in op.support):
                    grown.add(w)
        accepted |= grown
        level = sorted(grown, key=VectorString.sort_key)
    return VectorLanguage(alphabets, accepted, depth)


def component(L: VectorLanguage, i: int) -> PrefixLanguage:
    """Projection of ``L`` onto its ``i``-th component (0-based)."""
    if not 0 <= i < L.dim:
        raise DimensionError(f"component index {i} out of range for dimension {L.dim}")
    return PrefixLanguage(L.alphabets[i], {v.parts[i] for v in L.vectors}, L.depth)


def parse_vector(text, alphabets) -> VectorString:
    """Read ``["ab", "b"]`` style input (a list of component strings)."""
    alphabets = alphabet_vector(alphabets)
    if len(text) != len(alphabets):
        raise DimensionError(f"expected {len(alphabets)} components, got {len(text)}")
    return VectorString(tuple(parse_trace(p, a) for p, a in zip(text, alphabets)))


def spaced(alphabets) -> bool:
    return _spaced(frozenset().union(*alphabets))
