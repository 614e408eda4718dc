"""Terms over a ranked signature, written with operators on the right.

``App("a", (App("ε"),))`` prints as ``(ε)a``; variables print as ``x0``,
``x1``, ... A unary term is a spine ``(...((base)s1)...)sn`` whose base is a
constant or a variable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, VariableError

EPS = "ε"
_VAR = re.compile(r"x(\d+)$")


@dataclass(frozen=True)
class Var:
    index: int

    def __str__(self) -> str:
        return f"x{self.index}"

    __repr__ = __str__


@dataclass(frozen=True)
class App:
    op: str
    args: tuple = ()

    def __str__(self) -> str:
        if not self.args:
            return self.op
        return "(" + ",".join(str(a) for a in self.args) + ")" + self.op

    __repr__ = __str__


Term = App | Var

EPS_TERM = App(EPS)


def is_variable_name(name: str) -> bool:
    return bool(_VAR.match(name))


def variables(t) -> set:
    if isinstance(t, Var):
        return {t.index}
    out: set = set()
    for a in t.args:
        out |= variables(a)
    return out


def is_ground(t) -> bool:
    return not variables(t)


def operators(t) -> set:
    if isinstance(t, Var):
        return set()
    out = {t.op}
    for a in t.args:
        out |= operators(a)
    return out


def size(t) -> int:
    if isinstance(t, Var):
        return 1
    return 1 + sum(size(a) for a in t.args)


def substitute(t, args) -> Term:
    """Replace every ``x_i`` in ``t`` by ``args[i]`` simultaneously."""
    args = tuple(args)
    if isinstance(t, Var):
        if t.index >= len(args):
            raise VariableError(f"{t} has no substitute among {len(args)} arguments")
        return args[t.index]
    if not t.args:
        return t
    return App(t.op, tuple(substitute(a, args) for a in t.args))


def spine(word, base=None) -> Term:
    """The right-nested unary term applying ``word`` in order to ``base``
    (the constant ε by default)."""
    t = EPS_TERM if base is None else base
    for sym in word:
        t = App(sym, (t,))
    return t


def read_spine(t):
    """Split a unary term into ``(base, word)``; ``None`` if it is not unary."""
    word = []
    while isinstance(t, App) and len(t.args) == 1:
        word.append(t.op)
        t = t.args[0]
    if isinstance(t, App) and t.args:
        return None
    word.reverse()
    return t, tuple(word)


def term_of_trace(trace) -> Term:
    return spine(trace)


def trace_of_term(t) -> tuple:
    read = read_spine(t)
    if read is None or read[0] != EPS_TERM:
        raise ValueError(f"{t} is not a ground unary term")
    return read[1]


def parse_term(text: str) -> Term:
    """Parse right-application notation: ``ε``, ``x0``, ``((x0)b)c``,
    ``(x0,x1)f``."""
    tokens = list(_tokenize(text))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, len(text))

    def take(kind=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None or (kind is not None and tok[0] != kind):
            raise ParseError(f"expected {kind or 'token'} in term {text!r}", 1, tok[1] + 1)
        pos += 1
        return tok

    def name_term(name):
        m = _VAR.match(name)
        return Var(int(m.group(1))) if m else App(name)

    def term():
        kind, col, *rest = peek()
        if kind == "name":
            take()
            return name_term(rest[0])
        take("(")
        args = [term()]
        while peek()[0] == ",":
            take(",")
            args.append(term())
        take(")")
        _, _, op = take("name")
        return App(op, tuple(args))

    out = term()
    if pos != len(tokens):
        raise ParseError(f"trailing input in term {text!r}", 1, peek()[1] + 1)
    return out


def _tokenize(text: str):
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "(),":
            yield (ch, i)
            i += 1
        else:
            j = i
            while j < len(text) and text[j] not in "()," and not text[j].isspace():
                j += 1
            yield ("name", i, text[i:j])
            i = j
