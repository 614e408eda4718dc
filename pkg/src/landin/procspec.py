"""Process specification files.

A file holds one block per process::

    # comments run to the end of the line
    process P1 { alphabet: a, b; kind: explicit; traces: "ab"; depth: 3 }
    process P2 {
      alphabet: b, c;
      kind: path;
      expr: (b ; c)*;
      depth: 4;
    }

Fields may use ``:`` or ``=``. A field's value runs to the next field
keyword or the closing brace, minus a trailing ``;``. Explicit traces are
quoted strings, optionally inside ``[...]``. Path expressions use ``;`` for
sequence, ``|`` for choice and postfix ``*`` for iteration (``*`` binds
tightest, ``|`` loosest); their language is prefix-closed, then cut at the
depth.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import DepthError, ParseError, SymbolError
from .traces import EPSILON, PrefixLanguage, parse_trace, prefix_close, render_trace

FIELDS = ("alphabet", "kind", "expr", "traces", "depth")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_FIELD = re.compile(r"\b(" + "|".join(FIELDS) + r")\s*[:=]")


def _position(text: str, offset: int):
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _strip_comments(text: str) -> str:
    """Blank out ``#`` comments, keeping offsets (and string contents) intact."""
    out = []
    in_string = False
    in_comment = False
    for ch in text:
        if in_comment:
            if ch == "\n":
                in_comment = False
                out.append(ch)
            else:
                out.append(" ")
            continue
        if ch == '"':
            in_string = not in_string
        if ch == "#" and not in_string:
            in_comment = True
            out.append(" ")
            continue
        out.append(ch)
    return "".join(out)


# ---------------------------------------------------------------------------
# Path expressions


@dataclass(frozen=True)
class Atom:
    symbol: str


@dataclass(frozen=True)
class Seq:
    parts: tuple


@dataclass(frozen=True)
class Choice:
    options: tuple


@dataclass(frozen=True)
class Star:
    body: object


def parse_path(text: str, line: int = 1, column: int = 1):
    """Parse a path expression; positions in errors are offset by
    ``line``/``column`` of the expression in its file."""
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "();|*":
            tokens.append((ch, ch, i))
            i += 1
        else:
            m = _NAME.match(text, i)
            if not m:
                raise ParseError(f"unexpected character {ch!r} in path expression", line, column + i)
            tokens.append(("name", m.group(), i))
            i = m.end()
    pos = 0

    def where():
        return column + (tokens[pos][2] if pos < len(tokens) else len(text))

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def expect(kind):
        nonlocal pos
        if peek() != kind:
            raise ParseError(f"expected {kind!r} in path expression", line, where())
        pos += 1

    def choice():
        options = [seq()]
        while peek() == "|":
            expect("|")
            options.append(seq())
        return options[0] if len(options) == 1 else Choice(tuple(options))

    def seq():
        parts = [star()]
        while peek() == ";":
            expect(";")
            parts.append(star())
        return parts[0] if len(parts) == 1 else Seq(tuple(parts))

    def star():
        node = atom()
        while peek() == "*":
            expect("*")
            node = Star(node)
        return node

    def atom():
        nonlocal pos
        kind = peek()
        if kind == "name":
            name = tokens[pos][1]
            pos += 1
            return Atom(name)
        if kind == "(":
            expect("(")
            node = choice()
            expect(")")
            return node
        raise ParseError("expected a symbol or '('", line, where())

    if not tokens:
        raise ParseError("empty path expression", line, column)
    node = choice()
    if pos != len(tokens):
        raise ParseError(f"unexpected {tokens[pos][1]!r} in path expression", line, where())
    return node


def render_path(node, parent: int = 0) -> str:
    """Canonical text with the fewest parentheses: levels are choice (0),
    sequence (1), iteration (2)."""
    if isinstance(node, Atom):
        return node.symbol
    if isinstance(node, Star):
        return render_path(node.body, 3) + "*"
    if isinstance(node, Seq):
        text = " ; ".join(render_path(p, 2) for p in node.parts)
        return f"({text})" if parent > 1 else text
    text = " | ".join(render_path(p, 1) for p in node.options)
    return f"({text})" if parent > 0 else text


def path_symbols(node) -> set:
    if isinstance(node, Atom):
        return {node.symbol}
    if isinstance(node, Star):
        return path_symbols(node.body)
    children = node.parts if isinstance(node, Seq) else node.options
    out = set()
    for c in children:
        out |= path_symbols(c)
    return out


def has_star(node) -> bool:
    if isinstance(node, Star):
        return True
    if isinstance(node, Atom):
        return False
    children = node.parts if isinstance(node, Seq) else node.options
    return any(has_star(c) for c in children)


def _cat(left: set, right: set, k: int) -> set:
    return {u + v for u in left for v in right if len(u) + len(v) <= k}


def path_words(node, k: int):
    """``(full, prefixes)``: the words of the expression of length at most
    ``k``, and every prefix of length at most ``k`` of any of its words."""
    if isinstance(node, Atom):
        full = {(node.symbol,)} if k >= 1 else set()
        return full, {EPSILON} | full
    if isinstance(node, Choice):
        full, pref = set(), set()
        for option in node.options:
            f, p = path_words(option, k)
            full |= f
            pref |= p
        return full, pref
    if isinstance(node, Seq):
        full, pref = {EPSILON}, {EPSILON}
        for part in node.parts:
            f, p = path_words(part, k)
            pref = pref | _cat(full, p, k)
            full = _cat(full, f, k)
        return full, pref
    body_full, body_pref = path_words(node.body, k)
    full = {EPSILON}
    while True:
        grown = full | _cat(full, body_full, k)
        if grown == full:
            break
        full = grown
    return full, full | _cat(full, body_pref, k)


def _star_free_length(node) -> int:
    if isinstance(node, Atom):
        return 1
    if isinstance(node, Seq):
        return sum(_star_free_length(p) for p in node.parts)
    return max(_star_free_length(o) for o in node.options)


# ---------------------------------------------------------------------------
# Process blocks


@dataclass(frozen=True)
class ProcessSpec:
    name: str
    alphabet: tuple
    kind: str
    body: tuple
    depth: int | None = None

    def path(self):
        return parse_path(self.body[0])

    def language(self, depth: int | None = None) -> PrefixLanguage:
        """The prefix-closed language of this block, cut at ``depth`` (the
        block's own depth by default)."""
        depth = self.depth if depth is None else depth
        alphabet = frozenset(self.alphabet)
        if self.kind == "explicit":
            traces = prefix_close(parse_trace(t, alphabet) for t in self.body)
            longest = max(len(t) for t in traces)
            if depth is None:
                depth = longest
            return PrefixLanguage(alphabet, [t for t in traces if len(t) <= depth], depth)
        node = self.path()
        if depth is None:
            if has_star(node):
                raise DepthError(f"process {self.name}: an iterated path needs a depth")
            depth = _star_free_length(node)
        _, pref = path_words(node, depth)
        return PrefixLanguage(alphabet, pref, depth)

    def emit(self) -> str:
        lines = [f"process {self.name} {{", f"  alphabet: {', '.join(self.alphabet)};", f"  kind: {self.kind};"]
        if self.kind == "explicit":
            lines.append("  traces: " + ", ".join(json.dumps(t, ensure_ascii=False) for t in self.body) + ";")
        else:
            lines.append(f"  expr: {self.body[0]};")
        if self.depth is not None:
            lines.append(f"  depth: {self.depth};")
        lines.append("}")
        return "\n".join(lines)


def _fields(body: str, offset: int, text: str) -> dict:
    matches = list(_FIELD.finditer(body))
    if not matches:
        line, col = _position(text, offset)
        raise ParseError("process block has no fields", line, col)
    if body[: matches[0].start()].strip():
        line, col = _position(text, offset)
        raise ParseError(f"unexpected text {body[:matches[0].start()].strip()!r}", line, col)
    out = {}
    for m, nxt in zip(matches, matches[1:] + [None]):
        key = m.group(1)
        end = nxt.start() if nxt else len(body)
        raw = body[m.end():end]
        stripped = raw.rstrip()
        if stripped.endswith(";"):
            stripped = stripped[:-1]
        lead = len(raw) - len(raw.lstrip())
        if key in out:
            line, col = _position(text, offset + m.start())
            raise ParseError(f"duplicate field {key!r}", line, col)
        out[key] = (stripped.strip(), offset + m.end() + lead)
    return out


_STRING = re.compile(r'"((?:[^"\\]|\\.)*)"')


def _parse_traces(value: str, pos: int, text: str) -> list:
    inner = value.strip()
    if inner.startswith("[") and inner.endswith("]"):
        inner = inner[1:-1]
    out = []
    i = 0
    while i < len(inner):
        if inner[i].isspace() or inner[i] == ",":
            i += 1
            continue
        m = _STRING.match(inner, i)
        if not m:
            line, col = _position(text, pos)
            raise ParseError("traces must be quoted strings", line, col)
        out.append(json.loads(m.group(0)))
        i = m.end()
    return out


def parse_spec(text: str) -> list:
    clean = _strip_comments(text)
    specs = []
    names = set()
    i = 0
    header = re.compile(r"\s*process\s+(" + _NAME.pattern + r")\s*\{")
    while True:
        while i < len(clean) and clean[i].isspace():
            i += 1
        if i >= len(clean):
            break
        m = header.match(clean, i)
        if not m:
            line, col = _position(text, i)
            raise ParseError("expected 'process NAME {'", line, col)
        close = clean.find("}", m.end())
        if close < 0:
            line, col = _position(text, m.start(1))
            raise ParseError(f"process {m.group(1)} is missing its closing brace", line, col)
        name = m.group(1)
        if name in names:
            line, col = _position(text, m.start(1))
            raise ParseError(f"duplicate process name {name!r}", line, col)
        names.add(name)
        specs.append(_parse_block(name, clean[m.end():close], m.end(), text))
        i = close + 1
    return specs


def _parse_block(name: str, body: str, offset: int, text: str) -> ProcessSpec:
    fields = _fields(body, offset, text)
    if "alphabet" not in fields:
        line, col = _position(text, offset)
        raise ParseError(f"process {name} has no alphabet", line, col)
    raw, pos = fields["alphabet"]
    alphabet = [s for s in re.split(r"[,\s]+", raw) if s]
    for sym in alphabet:
        if not _NAME.fullmatch(sym) or sym in FIELDS:
            line, col = _position(text, pos)
            raise ParseError(f"bad symbol name {sym!r}", line, col)
    kind = fields.get("kind", ("explicit" if "traces" in fields else "path", offset))[0]
    if kind not in ("explicit", "path"):
        line, col = _position(text, fields["kind"][1])
        raise ParseError(f"unknown kind {kind!r}", line, col)
    depth = None
    if "depth" in fields:
        raw, pos = fields["depth"]
        if not raw.isdigit():
            line, col = _position(text, pos)
            raise ParseError(f"depth must be a natural number, got {raw!r}", line, col)
        depth = int(raw)
    alpha = frozenset(alphabet)
    if kind == "explicit":
        if "expr" in fields:
            line, col = _position(text, fields["expr"][1])
            raise ParseError("explicit processes take traces, not expr", line, col)
        raw, pos = fields.get("traces", ("", offset))
        traces = _parse_traces(raw, pos, text)
        canon = set()
        for t in traces:
            try:
                canon.add(render_trace(parse_trace(t, alpha), alpha))
            except SymbolError as exc:
                line, col = _position(text, pos)
                raise SymbolError(f"line {line}, column {col}: {exc.message}") from None
        body_out = tuple(sorted(canon, key=lambda s: (len(parse_trace(s, alpha)), s)))
    else:
        if "expr" not in fields:
            line, col = _position(text, offset)
            raise ParseError(f"path process {name} has no expr", line, col)
        raw, pos = fields["expr"]
        line, col = _position(text, pos)
        node = parse_path(raw, line, col)
        stray = path_symbols(node) - alpha
        if stray:
            raise SymbolError(f"line {line}, column {col}: undeclared symbols {sorted(stray)} in process {name}")
        body_out = (render_path(node),)
    spec = ProcessSpec(name, tuple(sorted(alpha)), kind, body_out, depth)
    spec.language()
    return spec


def emit_spec(specs) -> str:
    return "\n\n".join(s.emit() for s in specs) + "\n"


def load_spec(path) -> list:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())
