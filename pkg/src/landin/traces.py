"""Prefix-closed trace languages, projection and parallel composition.

A trace is a tuple of symbol names; the empty tuple is the empty trace.
Languages are finite: each one carries the depth bound up to which its
trace set is exact, and every equality between languages is an equality
of depth-bounded truncations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DepthError, EmptyLanguageError, SymbolError

Trace = tuple  # tuple[str, ...]

EPSILON: Trace = ()
EPSILON_NAME = "ε"


def trace_key(t: Trace):
    """Length-then-lexicographic order on traces."""
    return (len(t), t)


def sorted_traces(traces: Iterable[Trace]) -> list:
    return sorted(traces, key=trace_key)


def _spaced(alphabet) -> bool:
    return any(len(sym) > 1 for sym in alphabet)


def render_trace(t: Trace, alphabet=None, empty: str = "") -> str:
    if not t:
        return empty
    if _spaced(alphabet if alphabet is not None else t):
        return " ".join(t)
    return "".join(t)


def parse_trace(text: str, alphabet=None) -> Trace:
    """Read a trace written either as space-separated symbols or, when every
    symbol is one character long, as a plain string. With an ``alphabet``
    the unspaced form is tokenised by longest match."""
    text = text.strip()
    if not text or text in (EPSILON_NAME, "·"):
        return EPSILON
    if any(ch.isspace() for ch in text):
        parts = tuple(text.split())
        if alphabet is not None:
            for sym in parts:
                if sym not in alphabet:
                    raise SymbolError(f"undeclared symbol {sym!r} in trace {text!r}")
        return parts
    if alphabet is None:
        return tuple(text)
    names = sorted(alphabet, key=len, reverse=True)
    out, i = [], 0
    while i < len(text):
        for name in names:
            if text.startswith(name, i):
                out.append(name)
                i += len(name)
                break
        else:
            raise SymbolError(f"cannot read {text!r} over alphabet {sorted(alphabet)}")
    return tuple(out)


def project(s: Trace, alpha) -> Trace:
    """Delete from ``s`` every symbol outside ``alpha``."""
    return tuple(sym for sym in s if sym in alpha)


def prefixes(t: Trace):
    return [t[:i] for i in range(len(t) + 1)]


def is_prefix_closed(traces) -> bool:
    traces = set(traces)
    return all(t[:-1] in traces for t in traces if t)


def prefix_close(traces) -> frozenset:
    out = {EPSILON}
    for t in traces:
        out.update(prefixes(tuple(t)))
    return frozenset(out)


@dataclass(frozen=True)
class PrefixLanguage:
    """A nonempty prefix-closed set of traces over ``alphabet``, exact up to
    length ``depth``."""

    alphabet: frozenset
    traces: frozenset
    depth: int

    def __post_init__(self):
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        object.__setattr__(self, "traces", frozenset(tuple(t) for t in self.traces))
        if EPSILON_NAME in self.alphabet:
            raise SymbolError("ε is the empty trace, not a symbol")
        if not self.traces:
            raise EmptyLanguageError("a language must contain at least the empty trace")
        if self.depth < 0:
            raise DepthError(f"negative depth {self.depth}")
        for t in self.traces:
            if len(t) > self.depth:
                raise DepthError(f"trace {t} is longer than depth {self.depth}")
            stray = set(t) - self.alphabet
            if stray:
                raise SymbolError(f"trace {t} uses symbols {sorted(stray)} outside the alphabet")
        if EPSILON not in self.traces or not is_prefix_closed(self.traces):
            raise EmptyLanguageError("trace set is not prefix-closed")

    @classmethod
    def of(cls, alphabet, traces=(), depth: int | None = None, close: bool = True):
        """Build from loose input: symbols as an iterable or string, traces as
        strings or tuples. ``close`` prefix-closes the traces first."""
        if isinstance(alphabet, str):
            alphabet = re.split(r"[,\s]+", alphabet.strip()) if re.search(r"[,\s]", alphabet) else list(alphabet)
            alphabet = [a for a in alphabet if a]
        alphabet = frozenset(alphabet)
        ts = [parse_trace(t, alphabet) if isinstance(t, str) else tuple(t) for t in traces]
        ts = prefix_close(ts) if close else frozenset(ts) | ({EPSILON} if not ts else set())
        if depth is None:
            depth = max(len(t) for t in ts)
        return cls(alphabet, ts, depth)

    def __contains__(self, t) -> bool:
        return tuple(t) in self.traces

    def __len__(self) -> int:
        return len(self.traces)

    def __iter__(self):
        return iter(sorted_traces(self.traces))

    def truncate(self, depth: int) -> PrefixLanguage:
        if depth > self.depth:
            raise DepthError(f"cannot extend a depth-{self.depth} language to depth {depth}")
        return PrefixLanguage(self.alphabet, [t for t in self.traces if len(t) <= depth], depth)

    def symbols(self) -> list:
        return sorted(self.alphabet)

    def to_json(self) -> dict:
        return {
            "alphabet": sorted(self.alphabet),
            "depth": self.depth,
            "traces": [render_trace(t, self.alphabet) for t in self],
        }

    @classmethod
    def from_json(cls, data: dict) -> PrefixLanguage:
        alphabet = frozenset(data["alphabet"])
        traces = [parse_trace(t, alphabet) for t in data["traces"]]
        return cls(alphabet, traces, int(data["depth"]))

    def __repr__(self) -> str:
        body = ", ".join(render_trace(t, self.alphabet, EPSILON_NAME) for t in self)
        return f"PrefixLanguage({{{', '.join(self.symbols())}}}, {{{body}}}, depth={self.depth})"


def _check_parts(parts: Sequence[PrefixLanguage], depth: int):
    if not parts:
        raise EmptyLanguageError("composition needs at least one component")
    if depth < 0:
        raise DepthError(f"negative depth {depth}")
    for p in parts:
        if not isinstance(p, PrefixLanguage) or not p.traces:
            raise EmptyLanguageError(f"component {p!r} is not a nonempty language")
        if p.depth < depth:
            raise DepthError(f"component of depth {p.depth} cannot be composed at depth {depth}")


def union_alphabet(parts) -> frozenset:
    return frozenset().union(*(p.alphabet for p in parts))


def compose_parallel(parts: Sequence[PrefixLanguage], depth: int | None = None) -> PrefixLanguage:
    """n-ary parallel composition: the traces over the union alphabet whose
    projection onto every component alphabet is a trace of that component.

    Candidates are grown one symbol at a time from accepted traces only; a
    rejected trace has no accepted extension because projection preserves
    prefixes and components are prefix-closed.
    """
    parts = list(parts)
    if depth is None:
        depth = min(p.depth for p in parts) if parts else 0
    _check_parts(parts, depth)
    alphabet = union_alphabet(parts)
    symbols = sorted(alphabet)
    accepted = {EPSILON}
    frontier = [EPSILON]
    for _ in range(depth):
        grown = []
        for s in frontier:
            for sym in symbols:
                t = s + (sym,)
                if all(project(t, p.alphabet) in p.traces for p in parts):
                    grown.append(t)
        accepted.update(grown)
        frontier = grown
    return PrefixLanguage(alphabet, accepted, depth)
