"""Reading and writing logics: a line-oriented DSL, a JSON mirror, and DOT export.

DSL grammar (one statement per line, ``#`` starts a comment)::

    context <atom> <atom> [<atom> ...]
    vec[:<section>]  <atom> <number> [<number> ...]
    prob[:<section>] <atom> <number>

Numbers are decimals or exact rationals ``p/q``.  ``vec`` and ``prob``
lines without a section name belong to the section ``default``.  The JSON
form has top-level keys ``contexts``, ``vectors`` and ``probabilities``;
probabilities are written as strings so they stay exact.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .core import Logic, build_logic, is_valid_atom_id
from .errors import (
    DSLDimensionMismatch,
    DSLSyntaxError,
    LogicError,
    ParseError,
    UnknownAtomReference,
)

DEFAULT_SECTION = "default"

_TOKEN_RE = re.compile(r"\S+")
_SECTION_RE = re.compile(r"[A-Za-z0-9_.-]+")
_NUMBER_RE = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?(/\d+)?")


@dataclass
class LogicDocument:
    logic: Logic
    vectors: dict[str, dict[str, tuple[float, ...]]] = field(default_factory=dict)
    probabilities: dict[str, dict[str, Fraction]] = field(default_factory=dict)

    def vector_section(self, name: str | None = None) -> dict[str, tuple[float, ...]] | None:
        return _pick(self.vectors, name)

    def probability_section(self, name: str | None = None) -> dict[str, Fraction] | None:
        return _pick(self.probabilities, name)


def _pick(sections: dict, name: str | None):
    if name is not None:
        return sections.get(name)
    if DEFAULT_SECTION in sections:
        return sections[DEFAULT_SECTION]
    return next(iter(sections.values()), None)


def _number(tok: str, line: int, col: int) -> Fraction:
    if not _NUMBER_RE.fullmatch(tok):
        raise DSLSyntaxError(f"expected a number, got {tok!r}", line, col)
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise DSLSyntaxError(f"invalid number {tok!r}", line, col) from None


def _parse(text: str, *, need_contexts: bool) -> tuple[list, dict, dict, list]:
    contexts: list[tuple[str, ...]] = []
    ctx_lines: dict[frozenset, int] = {}
    vectors: dict[str, dict[str, tuple[float, ...]]] = {}
    vec_dims: dict[str, int] = {}
    probs: dict[str, dict[str, Fraction]] = {}
    refs: list[tuple[str, int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = [(m.group(), m.start() + 1) for m in _TOKEN_RE.finditer(body)]
        if not toks:
            continue
        kw, kw_col = toks[0]
        keyword, _, section = kw.partition(":")
        if keyword == "context":
            if section:
                raise DSLSyntaxError("context lines take no section name", lineno, kw_col)
            atoms = toks[1:]
            if len(atoms) < 2:
                col = atoms[-1][1] + len(atoms[-1][0]) if atoms else kw_col + len(kw)
                raise DSLSyntaxError("a context needs at least two atoms", lineno, col)
            seen = set()
            for a, c in atoms:
                if not is_valid_atom_id(a):
                    raise DSLSyntaxError(f"invalid atom id {a!r}", lineno, c)
                if a in seen:
                    raise DSLSyntaxError(f"atom {a!r} repeated in context", lineno, c)
                seen.add(a)
            key = frozenset(seen)
            if key in ctx_lines:
                raise DSLSyntaxError(f"duplicate of the context on line {ctx_lines[key]}", lineno, kw_col)
            ctx_lines[key] = lineno
            contexts.append(tuple(a for a, _ in atoms))
        elif keyword in ("vec", "prob"):
            if kw.endswith(":") or (section and not _SECTION_RE.fullmatch(section)):
                raise DSLSyntaxError(f"bad section name in {kw!r}", lineno, kw_col)
            section = section or DEFAULT_SECTION
            if len(toks) < 3:
                raise DSLSyntaxError(f"{keyword} needs an atom and a value", lineno, kw_col)
            atom, atom_col = toks[1]
            if not is_valid_atom_id(atom):
                raise DSLSyntaxError(f"invalid atom id {atom!r}", lineno, atom_col)
            refs.append((atom, lineno, atom_col))
            values = [_number(t, lineno, c) for t, c in toks[2:]]
            if keyword == "vec":
                sec = vectors.setdefault(section, {})
                if atom in sec:
                    raise DSLSyntaxError(f"second vector for {atom!r} in section {section!r}", lineno, atom_col)
                dim = vec_dims.setdefault(section, len(values))
                if dim != len(values):
                    raise DSLDimensionMismatch(
                        f"vector for {atom!r} has {len(values)} components, section {section!r} uses {dim}",
                        lineno,
                        toks[2][1],
                    )
                sec[atom] = tuple(float(v) for v in values)
            else:
                if len(values) != 1:
                    raise DSLSyntaxError("prob takes exactly one value", lineno, toks[3][1])
                (p,) = values
                if not 0 <= p <= 1:
                    raise DSLSyntaxError(f"probability {p} outside [0,1]", lineno, toks[2][1])
                sec = probs.setdefault(section, {})
                if atom in sec:
                    raise DSLSyntaxError(f"second probability for {atom!r} in section {section!r}", lineno, atom_col)
                sec[atom] = p
        else:
            raise DSLSyntaxError(f"unknown statement {keyword!r}", lineno, kw_col)

    if need_contexts and not contexts:
        raise DSLSyntaxError("document declares no contexts", 1, 1)
    return contexts, vectors, probs, refs


def _canonical(logic: Logic, sections: dict) -> dict:
    order = logic.index
    return {name: dict(sorted(sec.items(), key=lambda kv: order[kv[0]])) for name, sec in sections.items()}


def _check_refs(logic: Logic, refs) -> None:
    for atom, line, col in refs:
        if atom not in logic.index:
            raise UnknownAtomReference(f"atom {atom!r} is not in any context", line, col)


def parse_dsl(text: str) -> LogicDocument:
    """Parse DSL text into a :class:`LogicDocument`.

    Errors carry 1-based ``line``/``col``.  Section entries are reordered
    into canonical atom order.
    """
    contexts, vectors, probs, refs = _parse(text, need_contexts=True)
    logic = build_logic(contexts)
    _check_refs(logic, refs)
    return LogicDocument(logic, _canonical(logic, vectors), _canonical(logic, probs))


def _fmt_float(x: float) -> str:
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def _section_kw(keyword: str, name: str) -> str:
    return keyword if name == DEFAULT_SECTION else f"{keyword}:{name}"


def serialize_dsl(doc: LogicDocument) -> str:
    """Canonical DSL text; ``parse_dsl(serialize_dsl(d)) == d``."""
    lines = ["context " + " ".join(ctx) for ctx in doc.logic.contexts]
    order = doc.logic.index
    for name, sec in doc.vectors.items():
        kw = _section_kw("vec", name)
        for a in sorted(sec, key=order.__getitem__):
            lines.append(f"{kw} {a} " + " ".join(_fmt_float(x) for x in sec[a]))
    for name, sec in doc.probabilities.items():
        kw = _section_kw("prob", name)
        for a in sorted(sec, key=order.__getitem__):
            lines.append(f"{kw} {a} {sec[a]}")
    return "\n".join(lines) + "\n"


def parse_probabilities(text: str, logic: Logic, section: str | None = None) -> dict[str, Fraction]:
    """Read one probability section from a stand-alone ``prob`` file (DSL or JSON).

    Atoms must belong to ``logic``; the result is in canonical atom order.
    """
    if text.lstrip().startswith("{"):
        raw = _load_json(text).get("probabilities", {})
        sections = _json_sections(raw, _json_prob, "probabilities")
        refs = [(a, None, None) for sec in sections.values() for a in sec]
    else:
        _, _, sections, refs = _parse(text, need_contexts=False)
    _check_refs(logic, refs)
    chosen = _pick(_canonical(logic, sections), section)
    if chosen is None:
        raise ParseError("no probability section found" if section is None else f"no section {section!r}")
    return chosen


# -- JSON --------------------------------------------------------------------


def _load_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    return data


def _json_prob(v) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, float, str)):
        raise ParseError(f"invalid probability {v!r}")
    try:
        p = Fraction(str(v).strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"invalid probability {v!r}") from None
    if not 0 <= p <= 1:
        raise ParseError(f"probability {v!r} outside [0,1]")
    return p


def _json_vec(v) -> tuple[float, ...]:
    if not isinstance(v, list) or not v:
        raise ParseError(f"vector must be a nonempty list, got {v!r}")
    out = []
    for x in v:
        if isinstance(x, bool) or not isinstance(x, (int, float, str)):
            raise ParseError(f"invalid vector component {x!r}")
        try:
            out.append(float(Fraction(str(x))) if isinstance(x, str) else float(x))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"invalid vector component {x!r}") from None
    return tuple(out)


def _json_sections(raw, convert, what: str) -> dict:
    if not isinstance(raw, dict):
        raise ParseError(f"{what!r} must be an object")
    if raw and all(isinstance(v, dict) for v in raw.values()):
        return {str(name): {a: convert(v) for a, v in sec.items()} for name, sec in raw.items()}
    if any(isinstance(v, dict) for v in raw.values()):
        raise ParseError(f"{what!r} mixes sections and entries")
    return {DEFAULT_SECTION: {a: convert(v) for a, v in raw.items()}} if raw else {}


def parse_json(text: str) -> LogicDocument:
    data = _load_json(text)
    unknown = set(data) - {"contexts", "vectors", "probabilities"}
    if unknown:
        raise ParseError(f"unknown top-level keys: {', '.join(sorted(unknown))}")
    ctxs = data.get("contexts")
    if not isinstance(ctxs, list) or not ctxs or not all(isinstance(c, list) for c in ctxs):
        raise ParseError("'contexts' must be a nonempty list of lists")
    try:
        logic = build_logic([[str(a) for a in c] for c in ctxs])
    except LogicError as exc:
        raise ParseError(str(exc)) from None
    vectors = _json_sections(data.get("vectors", {}), _json_vec, "vectors")
    probs = _json_sections(data.get("probabilities", {}), _json_prob, "probabilities")
    for name, sec in vectors.items():
        if len({len(v) for v in sec.values()}) > 1:
            raise DSLDimensionMismatch(f"vectors of differing lengths in section {name!r}")
    _check_refs(logic, [(a, None, None) for s in (*vectors.values(), *probs.values()) for a in s])
    return LogicDocument(logic, _canonical(logic, vectors), _canonical(logic, probs))


def to_json_obj(doc: LogicDocument) -> dict:
    order = doc.logic.index
    return {
        "contexts": [list(c) for c in doc.logic.contexts],
        "vectors": {
            name: {a: list(sec[a]) for a in sorted(sec, key=order.__getitem__)} for name, sec in doc.vectors.items()
        },
        "probabilities": {
            name: {a: str(sec[a]) for a in sorted(sec, key=order.__getitem__)}
            for name, sec in doc.probabilities.items()
        },
    }


def serialize_json(doc: LogicDocument) -> str:
    return json.dumps(to_json_obj(doc), indent=2) + "\n"


# -- files -------------------------------------------------------------------


def loads(text: str) -> LogicDocument:
    """Parse either format, choosing JSON when the text starts with ``{``."""
    return parse_json(text) if text.lstrip().startswith("{") else parse_dsl(text)


def load(path: str | Path) -> LogicDocument:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(doc: LogicDocument, path: str | Path) -> None:
    path = Path(path)
    text = serialize_json(doc) if path.suffix == ".json" else serialize_dsl(doc)
    path.write_text(text, encoding="utf-8", newline="\n")


# -- DOT ---------------------------------------------------------------------


def _dot_str(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(logic: Logic, name: str = "logic") -> str:
    """Bipartite Graphviz graph: one node per atom, one per context, an edge per membership."""
    lines = [f"graph {_dot_str(name)} {{"]
    for a in logic.atoms:
        lines.append(f"  {_dot_str('atom:' + a)} [label={_dot_str(a)}, shape=circle];")
    for k, ctx in enumerate(logic.contexts, 1):
        label = "{" + ",".join(ctx) + "}"
        lines.append(f"  {_dot_str(f'ctx:{k}')} [label={_dot_str(label)}, shape=box];")
    for k, ctx in enumerate(logic.contexts, 1):
        for a in ctx:
            lines.append(f"  {_dot_str('atom:' + a)} -- {_dot_str(f'ctx:{k}')};")
    lines.append("}")
    return "\n".join(lines) + "\n"
