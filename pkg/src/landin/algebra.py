"""Finite partial algebras over ranked signatures.

Operation tables are dictionaries from argument tuples to results; a missing
key means the operation is undefined there. Algebras built from depth-bounded
languages carry a ``frontier``: elements whose outgoing operations were cut
off by the bound. Strong (two-way definedness) claims are never asserted at
frontier elements, so truncation cannot manufacture counterexamples.
"""

from __future__ import annotations

import itertools
import types
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Sequence

from .errors import (
    CongruenceError,
    DepthError,
    MapError,
    NotFinitelyGeneratedError,
    SignatureError,
    VariableError,
)
from .terms import EPS, App, Var, is_variable_name
from .traces import EPSILON_NAME, render_trace
from .vectors import VectorString


def language_signature(symbols: Iterable[str]) -> dict:
    """The constant ε plus one unary operator per symbol."""
    sig = {EPS: 0}
    sig.update({s: 1 for s in symbols})
    return sig


def element_key(e):
    if isinstance(e, tuple) and all(isinstance(x, str) for x in e):
        return (0, len(e), e)
    if isinstance(e, VectorString):
        return (1,) + e.sort_key()
    if isinstance(e, tuple):
        return (2, tuple(element_key(x) for x in e))
    if isinstance(e, frozenset):
        return (3, tuple(sorted(element_key(x) for x in e)))
    if isinstance(e, int):
        return (4, e)
    return (5, len(str(e)), str(e))


def element_name(e) -> str:
    """Canonical display name: traces as strings (ε for the empty one),
    tuples and vectors as ``(x,y)``, quotient blocks as ``{x|y}``."""
    if isinstance(e, str):
        return e
    if isinstance(e, tuple) and all(isinstance(x, str) for x in e):
        return render_trace(e, empty=EPSILON_NAME)
    if isinstance(e, VectorString):
        return "(" + ",".join(element_name(p) for p in e.parts) + ")"
    if isinstance(e, tuple):
        return "(" + ",".join(element_name(x) for x in e) + ")"
    if isinstance(e, frozenset):
        return "{" + "|".join(element_name(x) for x in sorted(e, key=element_key)) + "}"
    return str(e)


def _freeze(tables: Mapping) -> Mapping:
    return types.MappingProxyType({op: types.MappingProxyType(dict(t)) for op, t in tables.items()})


@dataclass(frozen=True, eq=False)
class PartialAlgebra:
    signature: Mapping
    carrier: frozenset
    tables: Mapping
    frontier: frozenset = field(default=frozenset())

    def __post_init__(self):
        sig = dict(self.signature)
        for op, n in sig.items():
            if not isinstance(n, int) or n < 0:
                raise SignatureError(f"bad arity {n!r} for {op!r}")
            if is_variable_name(op):
                raise SignatureError(f"operator name {op!r} clashes with variable names")
        carrier = frozenset(self.carrier)
        if not carrier:
            raise SignatureError("the carrier of an algebra must be nonempty")
        tables = {op: dict(self.tables.get(op, {})) for op in sig}
        extra = set(self.tables) - set(sig)
        if extra:
            raise SignatureError(f"tables for undeclared operators {sorted(extra)}")
        for op, table in tables.items():
            for args, res in table.items():
                if len(args) != sig[op]:
                    raise SignatureError(f"{op} has arity {sig[op]} but entry {args!r}")
                if res not in carrier or any(a not in carrier for a in args):
                    raise SignatureError(f"entry {args!r} -> {res!r} of {op} leaves the carrier")
            if sig[op] == 0 and () not in table:
                raise SignatureError(f"constant {op} is undefined")
        object.__setattr__(self, "signature", types.MappingProxyType(sig))
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "tables", _freeze(tables))
        object.__setattr__(self, "frontier", frozenset(self.frontier) & carrier)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialAlgebra):
            return NotImplemented
        return (
            dict(self.signature) == dict(other.signature)
            and self.carrier == other.carrier
            and {op: dict(t) for op, t in self.tables.items()}
            == {op: dict(t) for op, t in other.tables.items()}
        )

    __hash__ = None

    def apply(self, op: str, args: Sequence = ()):
        return self.tables[op].get(tuple(args))

    def arity(self, op: str) -> int:
        try:
            return self.signature[op]
        except KeyError:
            raise SignatureError(f"operator {op!r} not in signature") from None

    def constants(self) -> list:
        return sorted(op for op, n in self.signature.items() if n == 0)

    def elements(self) -> list:
        return sorted(self.carrier, key=element_key)

    def is_unary(self) -> bool:
        return all(n <= 1 for n in self.signature.values())

    def is_language_signature(self) -> bool:
        return self.constants() == [EPS] and self.is_unary()

    def entries(self):
        for op in sorted(self.signature):
            for args, res in self.tables[op].items():
                yield op, args, res

    def restrict(self, subset) -> PartialAlgebra:
        """The induced structure on ``subset`` (entries with all arguments and
        the result inside it)."""
        subset = frozenset(subset)
        tables = {
            op: {args: res for args, res in t.items() if res in subset and all(a in subset for a in args)}
            for op, t in self.tables.items()
        }
        return PartialAlgebra(self.signature, subset, tables, self.frontier & subset)

    def rename(self, f: Callable[[Any], Any]) -> PartialAlgebra:
        mapping = {e: f(e) for e in self.carrier}
        if len(set(mapping.values())) != len(mapping):
            raise MapError("renaming is not injective")
        tables = {
            op: {tuple(mapping[a] for a in args): mapping[res] for args, res in t.items()}
            for op, t in self.tables.items()
        }
        return PartialAlgebra(self.signature, mapping.values(), tables, {mapping[e] for e in self.frontier})

    def named(self) -> PartialAlgebra:
        return self.rename(element_name)

    def to_json(self) -> dict:
        key = {e: element_key(e) for e in self.carrier}
        tables = {}
        for op in sorted(self.signature):
            rows = sorted(self.tables[op].items(), key=lambda kv: tuple(key[a] for a in kv[0]))
            tables[op] = [[element_name(a) for a in args] + [element_name(res)] for args, res in rows]
        return {
            "signature": {op: self.signature[op] for op in sorted(self.signature)},
            "carrier": [element_name(e) for e in self.elements()],
            "tables": tables,
        }

    @classmethod
    def from_json(cls, data: dict) -> PartialAlgebra:
        sig = {op: int(n) for op, n in data["signature"].items()}
        tables = {op: {} for op in sig}
        for op, rows in data.get("tables", {}).items():
            if op not in sig:
                raise SignatureError(f"table for undeclared operator {op!r}")
            for row in rows:
                tables[op][tuple(row[:-1])] = row[-1]
        return cls(sig, data["carrier"], tables)

    def __repr__(self) -> str:
        return f"PartialAlgebra(|A|={len(self.carrier)}, ops={sorted(self.signature)})"


def to_dot(A: PartialAlgebra, name: str = "A") -> str:
    """Unary algebra as a labelled transition graph; constants are drawn as
    double circles."""
    if not A.is_unary():
        raise SignatureError("DOT export needs a unary signature")
    ids = {e: f"n{i}" for i, e in enumerate(A.elements())}
    consts = {A.apply(c) for c in A.constants()}

    def q(s: str) -> str:
        return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = [f"digraph {q(name)} {{"]
    for e, nid in ids.items():
        shape = "doublecircle" if e in consts else "circle"
        lines.append(f"  {nid} [label={q(element_name(e))}, shape={shape}];")
    for op in sorted(A.signature):
        if A.signature[op] != 1:
            continue
        for (arg,), res in sorted(A.tables[op].items(), key=lambda kv: element_key(kv[0][0])):
            lines.append(f"  {ids[arg]} -> {ids[res]} [label={q(op)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def eval_term(t, A: PartialAlgebra, assignment: Sequence = ()):
    """Value of ``t`` in ``A`` (variables bound by ``assignment``), or ``None``
    when the term is undefined."""
    if isinstance(t, Var):
        if t.index >= len(assignment):
            raise VariableError(f"no value for {t}")
        return assignment[t.index]
    n = A.arity(t.op)
    if n != len(t.args):
        raise SignatureError(f"{t.op} has arity {n}, applied to {len(t.args)} arguments")
    vals = []
    for arg in t.args:
        v = eval_term(arg, A, assignment)
        if v is None:
            return None
        vals.append(v)
    return A.tables[t.op].get(tuple(vals))


def _check_total(phi: Mapping, A: PartialAlgebra, B: PartialAlgebra):
    missing = [a for a in A.carrier if a not in phi]
    if missing:
        raise MapError(f"map undefined on {[element_name(a) for a in missing[:3]]}")
    stray = [a for a in A.carrier if phi[a] not in B.carrier]
    if stray:
        raise MapError(f"map sends {element_name(stray[0])} outside the target carrier")


def _same_signature(*algebras):
    sigs = {tuple(sorted(A.signature.items())) for A in algebras}
    if len(sigs) > 1:
        raise SignatureError("algebras have different signatures")


def homomorphism_violation(phi: Mapping, A: PartialAlgebra, B: PartialAlgebra, strong: bool = False):
    """First point where ``phi`` fails to be a (strong) homomorphism, as a
    dict, or ``None``."""
    _same_signature(A, B)
    _check_total(phi, A, B)
    for op in sorted(A.signature):
        n = A.signature[op]
        table_a, table_b = A.tables[op], B.tables[op]
        tuples = itertools.product(A.carrier, repeat=n) if strong else table_a.keys()
        for args in tuples:
            lhs = table_a.get(args)
            image = tuple(phi[a] for a in args)
            rhs = table_b.get(image)
            if lhs is not None and rhs is None:
                if any(b in B.frontier for b in image):
                    continue
                return {"op": op, "args": list(args), "reason": "defined in source only", "source": lhs}
            if lhs is None and rhs is not None:
                if any(a in A.frontier for a in args):
                    continue
                return {"op": op, "args": list(args), "reason": "defined in target only", "target": rhs}
            if lhs is not None and phi[lhs] != rhs:
                return {"op": op, "args": list(args), "reason": "values differ", "source": phi[lhs], "target": rhs}
    return None


def check_homomorphism(phi: Mapping, A: PartialAlgebra, B: PartialAlgebra, strong: bool = False) -> bool:
    return homomorphism_violation(phi, A, B, strong) is None


def direct_product(algebras: Sequence[PartialAlgebra]) -> PartialAlgebra:
    """Componentwise product; an operation is defined on a tuple iff it is
    defined in every factor."""
    algebras = list(algebras)
    if not algebras:
        raise SignatureError("a product needs at least one factor")
    _same_signature(*algebras)
    sig = dict(algebras[0].signature)
    carrier = list(itertools.product(*(A.carrier for A in algebras)))
    tables = {}
    for op, n in sig.items():
        table = {}
        for rows in itertools.product(*(list(A.tables[op].items()) for A in algebras)):
            args = tuple(tuple(row[0][j] for row in rows) for j in range(n))
            table[args] = tuple(row[1] for row in rows)
        tables[op] = table
    frontier = {x for x in carrier if any(c in A.frontier for c, A in zip(x, algebras))}
    return PartialAlgebra(sig, carrier, tables, frontier)


def closure_rounds(A: PartialAlgebra) -> list:
    """The ascending sequence Ac_0 ⊆ Ac_1 ⊆ ... up to its fixed point."""
    current = frozenset(A.apply(c) for c in A.constants())
    rounds = [current]
    entries = [(args, res) for _, args, res in A.entries() if args]
    while True:
        step = current | {res for args, res in entries if all(a in current for a in args)}
        if step == current:
            return rounds
        rounds.append(step)
        current = step


def closure_carrier(A: PartialAlgebra) -> frozenset:
    return closure_rounds(A)[-1]


def algebraic_closure(A: PartialAlgebra, depth: int | None = None) -> PartialAlgebra:
    """The minimal subalgebra: everything reachable from the constants.

    With ``depth`` only ``Ac_depth`` is kept; if the iteration had not yet
    converged, the elements first reached in the last kept round join the
    frontier, since their successors were cut off."""
    rounds = closure_rounds(A)
    if depth is None or depth >= len(rounds) - 1:
        return A.restrict(rounds[-1])
    if depth < 0:
        raise DepthError(f"negative depth {depth}")
    sub = A.restrict(rounds[depth])
    fresh = rounds[depth] - (rounds[depth - 1] if depth else frozenset())
    return PartialAlgebra(sub.signature, sub.carrier, sub.tables, sub.frontier | fresh)


def is_subalgebra(B: PartialAlgebra, A: PartialAlgebra) -> bool:
    """``|B| ⊆ |A|`` and every operation of ``B`` agrees with ``A`` on
    ``|B|`` under strong equality."""
    if dict(B.signature) != dict(A.signature) or not B.carrier <= A.carrier:
        return False
    for op, n in B.signature.items():
        for args in itertools.product(B.carrier, repeat=n):
            if B.apply(op, args) != A.apply(op, args):
                return False
    return True


def is_finitely_generated(A: PartialAlgebra) -> bool:
    return closure_carrier(A) == A.carrier


def unique_hom_from_fg(A: PartialAlgebra, B: PartialAlgebra):
    """The only possible homomorphism out of a finitely generated algebra,
    ``t^A ↦ t^B``, or ``None`` if that assignment is ill-defined or fails the
    homomorphism condition."""
    _same_signature(A, B)
    if not is_finitely_generated(A):
        raise NotFinitelyGeneratedError("source algebra is not generated by its constants")
    phi: dict = {}
    entries = list(A.entries())
    changed = True
    while changed:
        changed = False
        for op, args, res in entries:
            if any(a not in phi for a in args):
                continue
            image = tuple(phi[a] for a in args)
            rhs = B.apply(op, image)
            if rhs is None:
                if any(b in B.frontier for b in image):
                    raise DepthError(f"target truncated too shallow to interpret {op} at {image!r}")
                return None
            if res in phi:
                if phi[res] != rhs:
                    return None
            else:
                phi[res] = rhs
                changed = True
    return phi


@dataclass(frozen=True)
class Congruence:
    """An equivalence on a carrier given by its blocks."""

    blocks: frozenset

    def __post_init__(self):
        blocks = frozenset(frozenset(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        index = {}
        for b in blocks:
            if not b:
                raise MapError("empty block")
            for e in b:
                if e in index:
                    raise MapError(f"{element_name(e)} lies in two blocks")
                index[e] = b
        object.__setattr__(self, "_index", index)

    def block(self, e) -> frozenset:
        return self._index[e]

    def related(self, a, b) -> bool:
        return self._index[a] == self._index[b]

    @property
    def carrier(self) -> frozenset:
        return frozenset(self._index)

    @classmethod
    def identity(cls, carrier) -> Congruence:
        return cls(frozenset(frozenset([e]) for e in carrier))

    @classmethod
    def total(cls, carrier) -> Congruence:
        return cls(frozenset([frozenset(carrier)]))

    @classmethod
    def kernel(cls, carrier, f: Callable) -> Congruence:
        """``a ~ b`` iff ``f(a) == f(b)``."""
        groups: dict = {}
        for e in carrier:
            groups.setdefault(f(e), set()).add(e)
        return cls(frozenset(frozenset(g) for g in groups.values()))

    def restrict(self, subset) -> Congruence:
        subset = frozenset(subset)
        return Congruence(frozenset(b & subset for b in self.blocks if b & subset))


def _partition_of(theta: Congruence, A: PartialAlgebra):
    if theta.carrier != A.carrier:
        raise MapError("relation is not a partition of the carrier")


def congruence_violation(theta: Congruence, A: PartialAlgebra, strong: bool = False):
    _partition_of(theta, A)
    for op in sorted(A.signature):
        groups: dict = {}
        for args, res in A.tables[op].items():
            key = tuple(theta.block(a) for a in args)
            groups.setdefault(key, []).append((args, res))
        for key, rows in groups.items():
            if len({theta.block(res) for _, res in rows}) > 1:
                (a1, r1), (a2, r2) = rows[0], next(r for r in rows if not theta.related(r[1], rows[0][1]))
                return {"op": op, "args": [list(a1), list(a2)], "reason": "related arguments, unrelated results"}
            if strong:
                inner = [b - A.frontier for b in key]
                for args in itertools.product(*inner):
                    if args not in A.tables[op]:
                        return {"op": op, "args": list(args), "reason": "related tuple undefined"}
    return None


def check_congruence(theta: Congruence, A: PartialAlgebra, strong: bool = False) -> bool:
    return congruence_violation(theta, A, strong) is None


def quotient(A: PartialAlgebra, theta: Congruence) -> PartialAlgebra:
    """Algebra of blocks. An operation is defined on blocks when some choice
    of representatives lies in its domain."""
    if not check_congruence(theta, A):
        raise CongruenceError("relation lacks the substitution property")
    tables = {op: {} for op in A.signature}
    for op, args, res in A.entries():
        tables[op][tuple(theta.block(a) for a in args)] = theta.block(res)
    frontier = {b for b in theta.blocks if b & A.frontier}
    return PartialAlgebra(A.signature, theta.blocks, tables, frontier)


def natural_map(A: PartialAlgebra, thetas: Sequence[Congruence]) -> dict:
    return {a: tuple(th.block(a) for th in thetas) for a in A.carrier}


def subdirect_violation(A: PartialAlgebra, thetas: Sequence[Congruence]):
    """Check that ``a ↦ ([a]_1, ..., [a]_n)`` is injective and a strong
    homomorphism onto its image in the product of the quotients."""
    thetas = list(thetas)
    if not thetas:
        raise CongruenceError("a decomposition needs at least one congruence")
    for th in thetas:
        if not check_congruence(th, A):
            raise CongruenceError("a member of the family is not a congruence")
    quotients = [quotient(A, th) for th in thetas]
    nat = natural_map(A, thetas)
    seen: dict = {}
    for a, img in nat.items():
        if img in seen:
            return {"reason": "natural map not injective", "elements": [element_name(seen[img]), element_name(a)]}
        seen[img] = a
    for op in sorted(A.signature):
        n = A.signature[op]
        for args in itertools.product(A.carrier, repeat=n):
            lhs = A.apply(op, args)
            parts = [Q.apply(op, tuple(nat[a][i] for a in args)) for i, Q in enumerate(quotients)]
            rhs = None if any(p is None for p in parts) else tuple(parts)
            if lhs is None and rhs is not None:
                if any(a in A.frontier for a in args):
                    continue
                return {"op": op, "args": [element_name(a) for a in args], "reason": "defined in quotients only"}
            if lhs is not None and rhs is None:
                if any(b in Q.frontier for a in args for Q, b in zip(quotients, nat[a])):
                    continue
                return {"op": op, "args": [element_name(a) for a in args], "reason": "defined in algebra only"}
            if lhs is not None and nat[lhs] != rhs:
                return {"op": op, "args": [element_name(a) for a in args], "reason": "values differ"}
    return None


def check_subdirect(A: PartialAlgebra, thetas: Sequence[Congruence]) -> bool:
    return subdirect_violation(A, thetas) is None


def compare_algebras(left: PartialAlgebra, right: PartialAlgebra):
    """First difference between two algebras (carriers and tables), or
    ``None`` when they are equal."""
    if dict(left.signature) != dict(right.signature):
        return {"reason": "signatures differ"}
    only_left = left.carrier - right.carrier
    only_right = right.carrier - left.carrier
    if only_left or only_right:
        return {
            "reason": "carriers differ",
            "left_only": sorted(element_name(e) for e in only_left),
            "right_only": sorted(element_name(e) for e in only_right),
        }
    for op in sorted(left.signature):
        lt, rt = left.tables[op], right.tables[op]
        for args in sorted(set(lt) | set(rt), key=lambda a: tuple(element_key(x) for x in a)):
            if lt.get(args) != rt.get(args):
                show = lambda v: None if v is None else element_name(v)
                return {
                    "reason": "tables differ",
                    "op": op,
                    "args": [element_name(a) for a in args],
                    "left": show(lt.get(args)),
                    "right": show(rt.get(args)),
                }
    return None


def all_maps(A: PartialAlgebra, B: PartialAlgebra):
    """Every total map ``|A| → |B|``."""
    src = A.elements()
    for image in itertools.product(B.elements(), repeat=len(src)):
        yield dict(zip(src, image))


def homomorphisms(A: PartialAlgebra, B: PartialAlgebra, strong: bool = False) -> list:
    """Exhaustive search; intended for carriers of a handful of elements."""
    return [phi for phi in all_maps(A, B) if check_homomorphism(phi, A, B, strong)]
