"""Immutable model of a logic: atoms pasted together into contexts.

A *context* is a maximal set of mutually exclusive, co-measurable atoms (a
hyperedge of the orthogonality hypergraph).  A *logic* is a collection of
contexts glued at shared atoms.  Everything downstream (state enumeration,
partition indices, serialization) is a deterministic function of the
canonical order fixed here: atoms in order of first appearance, contexts in
insertion order.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DuplicateAtomInContext, DuplicateContext, EmptyContext, UnknownAtom

_ATOM_RE = re.compile(r"[^\s#,\[\]{}\"']+")


def is_valid_atom_id(token: str) -> bool:
    return isinstance(token, str) and _ATOM_RE.fullmatch(token) is not None


@dataclass(frozen=True, eq=False)
class Logic:
    """A pasting of contexts.

    Construct through :func:`build_logic`; the constructor itself does not
    validate.  Equality and hashing depend only on ``atoms`` and
    ``contexts``; ``warnings`` is derived information.
    """

    atoms: tuple[str, ...]
    contexts: tuple[tuple[str, ...], ...]
    warnings: tuple[str, ...] = field(default=())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Logic):
            return NotImplemented
        return self.atoms == other.atoms and self.contexts == other.contexts

    def __hash__(self) -> int:
        return hash((self.atoms, self.contexts))

    def __repr__(self) -> str:
        ctx = ", ".join("{" + ",".join(c) + "}" for c in self.contexts)
        return f"Logic([{ctx}])"

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    @property
    def n_contexts(self) -> int:
        return len(self.contexts)

    @cached_property
    def index(self) -> dict[str, int]:
        """Atom id -> position in the canonical atom order."""
        return {a: i for i, a in enumerate(self.atoms)}

    @cached_property
    def contexts_of(self) -> dict[str, tuple[int, ...]]:
        """Atom id -> indices of the contexts containing it."""
        out: dict[str, list[int]] = {a: [] for a in self.atoms}
        for k, ctx in enumerate(self.contexts):
            for a in ctx:
                out[a].append(k)
        return {a: tuple(v) for a, v in out.items()}

    @cached_property
    def context_sets(self) -> tuple[frozenset[str], ...]:
        return tuple(frozenset(c) for c in self.contexts)

    def atom_index(self, atom: str) -> int:
        try:
            return self.index[atom]
        except KeyError:
            raise UnknownAtom(f"unknown atom {atom!r}") from None

    def share_context(self, a: str, b: str) -> bool:
        """True iff ``a`` and ``b`` lie in at least one common context."""
        return bool(set(self.contexts_of[a]) & set(self.contexts_of[b]))

    def neighbours(self, atom: str) -> tuple[str, ...]:
        """Atoms sharing a context with ``atom`` (excluding itself), canonical order."""
        mates = set()
        for k in self.contexts_of[atom]:
            mates.update(self.contexts[k])
        mates.discard(atom)
        return tuple(a for a in self.atoms if a in mates)


def build_logic(contexts: Iterable[Sequence[str]]) -> Logic:
    """Validate a list of contexts and return the :class:`Logic` they paste into.

    Atoms are ordered by first appearance.  Two contexts with the same atom
    set are rejected; a context whose atoms are a subset of another's, or
    two contexts overlapping in two or more atoms, only produce a warning
    on the result.

    >>> build_logic([["a", "b", "c"], ["a", "d", "e"]]).atoms
    ('a', 'b', 'c', 'd', 'e')
    """
    ctxs: list[tuple[str, ...]] = []
    seen: dict[frozenset[str], int] = {}
    atoms: dict[str, None] = {}
    for k, raw in enumerate(contexts):
        ctx = tuple(raw)
        if len(ctx) < 2:
            raise EmptyContext(f"context {k + 1} has {len(ctx)} atom(s); at least 2 are required")
        for a in ctx:
            if not is_valid_atom_id(a):
                raise EmptyContext(f"context {k + 1} contains an invalid atom id {a!r}")
        if len(set(ctx)) != len(ctx):
            dup = next(a for a in ctx if ctx.count(a) > 1)
            raise DuplicateAtomInContext(f"atom {dup!r} repeated in context {k + 1}")
        key = frozenset(ctx)
        if key in seen:
            raise DuplicateContext(f"context {k + 1} duplicates context {seen[key] + 1}")
        seen[key] = k
        ctxs.append(ctx)
        for a in ctx:
            atoms.setdefault(a, None)

    warnings = []
    sets = [frozenset(c) for c in ctxs]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            common = sets[i] & sets[j]
            if sets[i] < sets[j] or sets[j] < sets[i]:
                small, big = (i, j) if sets[i] < sets[j] else (j, i)
                warnings.append(f"context {small + 1} is a subset of context {big + 1}")
            elif len(common) >= 2:
                warnings.append(f"contexts {i + 1} and {j + 1} share {len(common)} atoms")
    return Logic(tuple(atoms), tuple(ctxs), tuple(warnings))


def intertwine_atoms(logic: Logic) -> frozenset[str]:
    """Atoms belonging to two or more contexts."""
    return frozenset(a for a, ks in logic.contexts_of.items() if len(ks) >= 2)


def intertwine_list(logic: Logic) -> list[str]:
    """:func:`intertwine_atoms` in canonical atom order."""
    shared = intertwine_atoms(logic)
    return [a for a in logic.atoms if a in shared]
