"""Command-line front end: ``landin <command> --in FILE [options]``.

Exit status is 0 when everything ran and every check passed, 1 when a check
failed (the reports are still written), and 2 for usage, parse and input
errors (reported as JSON on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .algebra import PartialAlgebra, algebraic_closure, direct_product, element_name, to_dot
from .category import DerivedHom, Derivor, Simulation
from .correspondence import language_to_algebra, run_check
from .errors import LandinError
from .generate import GeneratorConfig, run_suite, suite_ids
from .procspec import emit_spec, parse_spec
from .traces import PrefixLanguage, compose_parallel, parse_trace, render_trace, union_alphabet
from .vectors import normal_form, product, word_ops
from .vectors import vfs as vfs_of

COMMANDS = ("compose", "vfs", "algebra", "closure", "nf", "check", "fmt")
TEXT_EMPTY = "·"


class UsageError(LandinError):
    code = "E_USAGE"


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    depth: int | None = None
    format: str | None = None
    seed: int = 0
    instances: int = 10
    out: str | None = None
    process: str | None = None
    target: str | None = None
    max_symbols: int = 5
    max_components: int = 3
    max_depth: int = 6

    def __post_init__(self):
        if self.depth is not None and self.depth < 0:
            raise UsageError(f"depth must be non-negative, got {self.depth}")
        if self.instances < 1:
            raise UsageError("--instances must be at least 1")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="landin", description="Trace languages, vector firing sequences and partial algebras.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("target", nargs="?", help="check id or SUITE for `check`; a word for `nf`")
    p.add_argument("--in", dest="input", metavar="FILE", help="process specification (or a JSON fixture for `check`)")
    p.add_argument("--depth", type=int)
    p.add_argument("--format", choices=("json", "dot", "text"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=10)
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--process", help="comma-separated process names (default: all)")
    p.add_argument("--max-symbols", type=int, default=5)
    p.add_argument("--max-components", type=int, default=3)
    p.add_argument("--max-depth", type=int, default=6)
    return p


# ---------------------------------------------------------------------------
# Helpers


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _specs(cfg: RunConfig) -> list:
    if not cfg.input:
        raise UsageError(f"`{cfg.command}` needs --in FILE")
    specs = parse_spec(_read(cfg.input))
    if not specs:
        raise UsageError(f"{cfg.input} defines no processes")
    if cfg.process:
        wanted = [n.strip() for n in cfg.process.split(",") if n.strip()]
        by_name = {s.name: s for s in specs}
        missing = [n for n in wanted if n not in by_name]
        if missing:
            raise UsageError(f"unknown processes {missing}")
        return [by_name[n] for n in wanted]
    return specs


def _languages(cfg: RunConfig) -> list:
    langs = [s.language() for s in _specs(cfg)]
    if cfg.depth is not None:
        for s, L in zip(_specs(cfg), langs):
            if s.depth is not None and L.depth < cfg.depth:
                raise UsageError(f"process {s.name} is only known to depth {L.depth}")
        langs = [s.language(cfg.depth) for s in _specs(cfg)]
    return langs


def _depth(cfg: RunConfig, langs) -> int:
    return min(L.depth for L in langs) if cfg.depth is None else cfg.depth


def _format(cfg: RunConfig, allowed, default: str = "json") -> str:
    fmt = cfg.format or default
    if fmt not in allowed:
        raise UsageError(f"`{cfg.command}` does not support --format {fmt}")
    return fmt


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _text_name(e) -> str:
    if isinstance(e, tuple) and not e:
        return TEXT_EMPTY
    return element_name(e).replace("ε", TEXT_EMPTY)


def _algebra_text(A: PartialAlgebra) -> str:
    lines = ["carrier: " + " ".join(_text_name(e) for e in A.elements())]
    for op in sorted(A.signature):
        for args, res in sorted(A.tables[op].items(), key=lambda kv: [element_name(a) for a in kv[0]]):
            lhs = " ".join(_text_name(a) for a in args)
            lines.append(f"{op}({lhs}) = {_text_name(res)}" if args else f"{op} = {_text_name(res)}")
    return "\n".join(lines) + "\n"


def _algebra_output(A: PartialAlgebra, fmt: str, name: str) -> str:
    if fmt == "dot":
        return to_dot(A, name)
    if fmt == "text":
        return _algebra_text(A)
    return _dump(A.to_json())


# ---------------------------------------------------------------------------
# Commands. Each returns (exit status, document).


def cmd_compose(cfg: RunConfig):
    fmt = _format(cfg, ("json", "text"))
    langs = _languages(cfg)
    L = compose_parallel(langs, _depth(cfg, langs))
    if fmt == "text":
        return 0, "".join(render_trace(t, L.alphabet, TEXT_EMPTY) + "\n" for t in L)
    return 0, _dump(L.to_json())


def cmd_vfs(cfg: RunConfig):
    fmt = _format(cfg, ("json", "text"))
    langs = _languages(cfg)
    V = vfs_of(langs, _depth(cfg, langs))
    if fmt == "text":
        return 0, "".join(v.render(V.union_alphabet, TEXT_EMPTY) + "\n" for v in V)
    return 0, _dump(V.to_json())


def cmd_algebra(cfg: RunConfig):
    fmt = _format(cfg, ("json", "dot", "text"))
    specs = _specs(cfg)
    if len(specs) != 1 and not cfg.process:
        specs = specs[:1]
    if len(specs) != 1:
        raise UsageError("`algebra` takes exactly one process")
    L = specs[0].language(cfg.depth)
    A = language_to_algebra(L).named()
    return 0, _algebra_output(A, fmt, specs[0].name)


def cmd_closure(cfg: RunConfig):
    fmt = _format(cfg, ("json", "dot", "text"))
    langs = _languages(cfg)
    depth = _depth(cfg, langs)
    sigma = sorted(union_alphabet(langs))
    prod = direct_product([language_to_algebra(L.truncate(depth), sigma) for L in langs])
    A = algebraic_closure(prod, depth).named()
    return 0, _algebra_output(A, fmt, "closure")


def cmd_nf(cfg: RunConfig):
    fmt = _format(cfg, ("json", "text"), "text")
    if cfg.target is None:
        raise UsageError("`nf` needs a word, e.g. landin nf \"c a\" --in FILE")
    alphabets = tuple(frozenset(s.alphabet) for s in _specs(cfg))
    union = frozenset().union(*alphabets)
    word = parse_trace(cfg.target, union)
    nf = tuple(op.source for op in normal_form(word_ops(word, alphabets)))
    rendered = " ".join(nf) if nf else (TEXT_EMPTY if fmt == "text" else "")
    if fmt == "text":
        return 0, rendered + "\n"
    v = product(word_ops(word, alphabets), len(alphabets))
    return 0, _dump({
        "word": " ".join(word),
        "normal_form": rendered,
        "vector": [render_trace(p, union) for p in v.parts],
    })


def cmd_fmt(cfg: RunConfig):
    _format(cfg, ("text",), "text")
    return 0, emit_spec(_specs(cfg))


# --- check ---


def _algebra(data) -> PartialAlgebra:
    return PartialAlgebra.from_json(data)


def load_fixture(data: dict) -> tuple:
    """``(instance, depth)`` from a JSON fixture. Recognised keys: ``parts``,
    ``language`` (PrefixLanguage JSON), ``sigma``, ``algebra``, ``algebras``,
    ``closure``, ``source``, ``target`` (PartialAlgebra JSON), ``hom``
    (``derivor``/``phi``/``strong``), ``canonical``, ``simulation``
    (``source``/``target``/``map``/``strong``) and ``depth``."""
    inst: dict = {}
    if "parts" in data:
        inst["parts"] = [PrefixLanguage.from_json(p) for p in data["parts"]]
    if "language" in data:
        inst["language"] = PrefixLanguage.from_json(data["language"])
    if "sigma" in data:
        inst["sigma"] = list(data["sigma"])
    for key in ("algebra", "closure", "source", "target"):
        if key in data:
            inst[key] = _algebra(data[key])
    if "algebras" in data:
        inst["algebras"] = [_algebra(a) for a in data["algebras"]]
    if "hom" in data:
        h = data["hom"]
        inst["hom"] = DerivedHom(Derivor.from_json(h["derivor"]), dict(h["phi"]), bool(h.get("strong", False)))
    if "canonical" in data:
        inst["canonical"] = bool(data["canonical"])
    if "simulation" in data:
        s = data["simulation"]
        source, target = PrefixLanguage.from_json(s["source"]), PrefixLanguage.from_json(s["target"])
        symbol_map = {sym: parse_trace(w, target.alphabet) for sym, w in s["map"].items()}
        inst["simulation"] = Simulation(source, target, symbol_map, bool(s.get("strong", False)))
        inst.setdefault("language", source)
    return inst, data.get("depth")


def _spec_instance(cfg: RunConfig) -> tuple:
    langs = _languages(cfg)
    sigma = sorted(union_alphabet(langs))
    inst = {
        "parts": langs,
        "sigma": sigma,
        "language": langs[0],
        "algebra": language_to_algebra(langs[0], sigma, truncated=False),
        "algebras": [language_to_algebra(L, sigma, truncated=False) for L in langs],
    }
    return inst, None


def _reports_doc(reports) -> dict:
    failed = [r for r in reports if not r.passed]
    return {
        "summary": {"total": len(reports), "passed": len(reports) - len(failed), "failed": len(failed)},
        "reports": [r.to_json() for r in reports],
    }


def cmd_check(cfg: RunConfig):
    fmt = _format(cfg, ("json", "text"))
    target = cfg.target
    if target is None:
        raise UsageError("`check` needs a check id or SUITE")
    ids = suite_ids() if target == "SUITE" else [target]
    if target != "SUITE" and target not in suite_ids():
        raise UsageError(f"unknown check id {target!r}; known: {', '.join(suite_ids())}")
    if cfg.input:
        text = _read(cfg.input)
        if text.lstrip().startswith("{"):
            try:
                inst, depth = load_fixture(json.loads(text))
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise UsageError(f"bad fixture {cfg.input}: {exc}") from None
        else:
            inst, depth = _spec_instance(cfg)
        depth = cfg.depth if cfg.depth is not None else depth
        reports = []
        for check_id in ids:
            try:
                reports.append(run_check(check_id, inst, depth))
            except KeyError as exc:
                raise UsageError(f"input lacks {exc} needed by {check_id}") from None
    else:
        gen = GeneratorConfig(max_symbols=cfg.max_symbols, max_components=cfg.max_components, max_depth=cfg.max_depth)
        reports = run_suite(cfg.seed, cfg.instances, ids, gen)
    status = 0 if all(r.passed for r in reports) else 1
    if fmt == "text":
        lines = []
        for r in reports:
            lines.append(r.line())
            if not r.passed:
                lines.append("  counterexample: " + json.dumps(r.counterexample, ensure_ascii=False))
        return status, "\n".join(lines) + "\n"
    return status, _dump(_reports_doc(reports))


HANDLERS = {
    "compose": cmd_compose,
    "vfs": cmd_vfs,
    "algebra": cmd_algebra,
    "closure": cmd_closure,
    "nf": cmd_nf,
    "check": cmd_check,
    "fmt": cmd_fmt,
}


def run_command(cfg: RunConfig):
    """``(exit status, document)`` for one command."""
    return HANDLERS[cfg.command](cfg)


def _error_payload(exc: LandinError) -> dict:
    doc = {"error": exc.code, "message": exc.message}
    for key in ("line", "column"):
        if hasattr(exc, key):
            doc[key] = getattr(exc, key)
    return doc


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cfg = RunConfig(
            command=args.command, input=args.input, depth=args.depth, format=args.format,
            seed=args.seed, instances=args.instances, out=args.out, process=args.process,
            target=args.target, max_symbols=args.max_symbols, max_components=args.max_components,
            max_depth=args.max_depth,
        )
        status, doc = run_command(cfg)
    except LandinError as exc:
        sys.stderr.write(json.dumps(_error_payload(exc), ensure_ascii=False) + "\n")
        return 2
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)
    return status


if __name__ == "__main__":
    sys.exit(main())
