"""Two-valued states, the contextuality ladder, partition logics and gadgets.

A two-valued state assigns 1 to exactly one atom per context and 0 to the
rest.  States are enumerated by backtracking over contexts with unit
propagation on integer bitmasks, then sorted into canonical order: rows
are compared lexicographically along the canonical atom order with 1
ranking before 0.  For the two-intertwined logic this reproduces the state
numbering of the familiar partition logic {{1},{2,3},{4,5}} / {{1},{2,4},{3,5}}
without any reindexing.

Indices into a :class:`StateSet` exposed through :class:`PartitionLogic`
are 1-based.
"""

from __future__ import annotations

import enum
import os
from collections.abc import Iterable, Iterator, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .core import Logic
from .errors import EmptyStateSet, MissingAtom, UnknownAtom

THREADS_ENV = "CONTEXTUALITY_LAB_THREADS"

# Below this many atoms the process pool costs more than the search.
_PARALLEL_MIN_ATOMS = 24


@dataclass(frozen=True)
class TwoValuedState:
    atoms: tuple[str, ...]
    values: tuple[int, ...]

    def __getitem__(self, atom: str) -> int:
        try:
            return self.values[self.atoms.index(atom)]
        except ValueError:
            raise UnknownAtom(f"unknown atom {atom!r}") from None

    @property
    def true_atoms(self) -> tuple[str, ...]:
        return tuple(a for a, v in zip(self.atoms, self.values) if v)

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.atoms, self.values))


@dataclass(frozen=True)
class StateSet(Sequence):
    """All two-valued states of ``logic`` in canonical order."""

    logic: Logic
    rows: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [TwoValuedState(self.logic.atoms, r) for r in self.rows[i]]
        return TwoValuedState(self.logic.atoms, self.rows[i])

    def __iter__(self) -> Iterator[TwoValuedState]:
        for r in self.rows:
            yield TwoValuedState(self.logic.atoms, r)

    @cached_property
    def matrix(self) -> np.ndarray:
        """``(n_states, n_atoms)`` 0/1 array."""
        return np.array(self.rows, dtype=np.int8).reshape(len(self.rows), self.logic.n_atoms)

    def column(self, atom: str) -> tuple[int, ...]:
        j = self.logic.atom_index(atom)
        return tuple(r[j] for r in self.rows)

    def table(self) -> str:
        """Fixed-width text table, one row per state (1-based index)."""
        atoms = self.logic.atoms
        width = max([len(a) for a in atoms] + [1])
        idx_w = max(len(str(len(self.rows))), 1)
        head = " " * idx_w + "  " + " ".join(a.rjust(width) for a in atoms)
        lines = [head]
        for i, r in enumerate(self.rows, 1):
            lines.append(str(i).rjust(idx_w) + "  " + " ".join(str(v).rjust(width) for v in r))
        return "\n".join(lines)


# -- enumeration -------------------------------------------------------------


def _masks(logic: Logic) -> tuple[list[int], list[int]]:
    idx = logic.index
    ctx_masks = []
    for ctx in logic.contexts:
        m = 0
        for a in ctx:
            m |= 1 << idx[a]
        ctx_masks.append(m)
    nbr = [0] * logic.n_atoms
    for m in ctx_masks:
        bits = m
        while bits:
            low = bits & -bits
            i = low.bit_length() - 1
            nbr[i] |= m & ~low
            bits ^= low
    return ctx_masks, nbr


def _propagate(ctx_masks, nbr, ones, zeros):
    """Unit propagation to a fixpoint; returns ``(ones, zeros, open_ctx)`` or None.

    ``open_ctx`` is the index of the first context without a true atom, or
    -1 when every context is satisfied.
    """
    changed = True
    while changed:
        changed = False
        open_ctx = -1
        for k, m in enumerate(ctx_masks):
            if m & ones:
                continue
            free = m & ~zeros
            if not free:
                return None
            if free & (free - 1) == 0:
                i = free.bit_length() - 1
                if nbr[i] & ones:
                    return None
                ones |= free
                zeros |= nbr[i]
                changed = True
            elif open_ctx < 0:
                open_ctx = k
    return ones, zeros, open_ctx


def _search(ctx_masks, nbr, ones, zeros) -> list[int]:
    found: list[int] = []
    stack = [(ones, zeros)]
    while stack:
        ones, zeros = stack.pop()
        res = _propagate(ctx_masks, nbr, ones, zeros)
        if res is None:
            continue
        ones, zeros, k = res
        if k < 0:
            found.append(ones)
            continue
        free = ctx_masks[k] & ~zeros
        branches = []
        while free:
            low = free & -free
            i = low.bit_length() - 1
            if not nbr[i] & ones:
                branches.append((ones | low, zeros | nbr[i]))
            free ^= low
        stack.extend(reversed(branches))
    return found


def _search_task(args):
    return _search(*args)


def resolve_threads(threads: int | None = None) -> int:
    """Worker count: explicit value, else ``$CONTEXTUALITY_LAB_THREADS``, else 1.

    0 means one worker per CPU.
    """
    if threads is None:
        raw = os.environ.get(THREADS_ENV, "").strip()
        try:
            threads = int(raw) if raw else 1
        except ValueError:
            threads = 1
    if threads <= 0:
        threads = os.cpu_count() or 1
    return threads


def enumerate_states(logic: Logic, threads: int | None = None) -> StateSet:
    """All two-valued states of ``logic``, canonically ordered.

    With more than one worker the search tree is split at the first
    branching context and the subtrees are searched in separate processes;
    the merged result is identical to the serial one.
    """
    ctx_masks, nbr = _masks(logic)
    n = logic.n_atoms
    workers = resolve_threads(threads)

    masks: list[int]
    root = _propagate(ctx_masks, nbr, 0, 0)
    if root is None:
        masks = []
    elif workers > 1 and n >= _PARALLEL_MIN_ATOMS and root[2] >= 0:
        ones, zeros, k = root
        free = ctx_masks[k] & ~zeros
        tasks = []
        while free:
            low = free & -free
            i = low.bit_length() - 1
            tasks.append((ctx_masks, nbr, ones | low, zeros | nbr[i]))
            free ^= low
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            masks = [m for part in pool.map(_search_task, tasks) for m in part]
    else:
        masks = _search(ctx_masks, nbr, 0, 0)

    rows = {tuple((m >> j) & 1 for j in range(n)) for m in masks}
    return StateSet(logic, tuple(sorted(rows, reverse=True)))


def brute_force_states(logic: Logic, max_atoms: int = 22) -> StateSet:
    """Exhaustive oracle: filter all ``2**n`` assignments by the context sums.

    Independent of the backtracking search; intended for checking it on
    small logics.
    """
    n = logic.n_atoms
    if n > max_atoms:
        raise ValueError(f"brute force over 2**{n} assignments refused (max_atoms={max_atoms})")
    codes = np.arange(1 << n, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(n)) & 1).astype(np.int8)
    incidence = np.zeros((n, logic.n_contexts), dtype=np.int8)
    for k, ctx in enumerate(logic.contexts):
        for a in ctx:
            incidence[logic.index[a], k] = 1
    ok = np.all(bits @ incidence == 1, axis=1)
    rows = {tuple(int(v) for v in r) for r in bits[ok]}
    return StateSet(logic, tuple(sorted(rows, reverse=True)))


def is_admissible(logic: Logic, assignment: Mapping[str, int]) -> bool:
    """True iff ``assignment`` puts exactly one 1 on every context."""
    missing = [a for a in logic.atoms if a not in assignment]
    if missing:
        raise MissingAtom(f"assignment is missing atoms: {', '.join(missing)}")
    extra = [a for a in assignment if a not in logic.index]
    if extra:
        raise UnknownAtom(f"assignment mentions unknown atoms: {', '.join(map(str, extra))}")
    for a in logic.atoms:
        if assignment[a] not in (0, 1):
            raise ValueError(f"value of {a!r} must be 0 or 1, got {assignment[a]!r}")
    return all(sum(assignment[a] for a in ctx) == 1 for ctx in logic.contexts)


# -- classification ----------------------------------------------------------


class Level(enum.Enum):
    SEPARATING = "SEPARATING"
    UNITAL_INSEPARABLE = "UNITAL_INSEPARABLE"
    NONUNITAL = "NONUNITAL"
    STATELESS = "STATELESS"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Classification:
    nonempty: bool
    unital: bool
    separating: bool
    level: Level
    nonunital_atoms: tuple[str, ...]
    inseparable_pairs: tuple[tuple[str, str], ...]
    n_states: int

    def to_dict(self) -> dict:
        return {
            "level": self.level.value,
            "nonempty": self.nonempty,
            "unital": self.unital,
            "separating": self.separating,
            "n_states": self.n_states,
            "nonunital_atoms": list(self.nonunital_atoms),
            "inseparable_pairs": [list(p) for p in self.inseparable_pairs],
        }


def classify(logic: Logic, states: StateSet | None = None) -> Classification:
    """Place ``logic`` on the ladder SEPARATING > UNITAL_INSEPARABLE > NONUNITAL > STATELESS.

    Separating means unital *and* every pair of distinct atoms is told
    apart by some state, i.e. the Kochen-Specker criterion for a faithful
    embedding into a Boolean algebra.  Witness pairs are reported in
    canonical order.
    """
    if states is None:
        states = enumerate_states(logic)
    cols = {a: states.column(a) for a in logic.atoms}
    nonunital = tuple(a for a in logic.atoms if not any(cols[a]))
    atoms = logic.atoms
    pairs = tuple(
        (atoms[i], atoms[j])
        for i in range(len(atoms))
        for j in range(i + 1, len(atoms))
        if cols[atoms[i]] == cols[atoms[j]]
    )
    nonempty = len(states) > 0
    unital = nonempty and not nonunital
    separating = unital and not pairs
    if separating:
        level = Level.SEPARATING
    elif unital:
        level = Level.UNITAL_INSEPARABLE
    elif nonempty:
        level = Level.NONUNITAL
    else:
        level = Level.STATELESS
    return Classification(nonempty, unital, separating, level, nonunital, pairs, len(states))


# -- partition logic ---------------------------------------------------------


@dataclass(frozen=True)
class PartitionLogic:
    """Each atom as the set of (1-based) indices of the states making it true."""

    logic: Logic
    n_states: int
    atom_blocks: dict[str, frozenset[int]]
    context_partitions: tuple[tuple[frozenset[int], ...], ...]

    def format(self) -> str:
        def block(b):
            return "{" + ",".join(str(i) for i in sorted(b)) + "}"

        parts = ["{" + ",".join(block(b) for b in p) + "}" for p in self.context_partitions]
        return "{" + ", ".join(parts) + "}"

    def to_dict(self) -> dict:
        return {
            "n_states": self.n_states,
            "atom_blocks": {a: sorted(b) for a, b in self.atom_blocks.items()},
            "context_partitions": [[sorted(b) for b in p] for p in self.context_partitions],
        }


def partition_logic(logic: Logic, states: StateSet | None = None) -> PartitionLogic:
    if states is None:
        states = enumerate_states(logic)
    if len(states) == 0:
        raise EmptyStateSet("a stateless logic has no partition-logic representation")
    blocks = {
        a: frozenset(i for i, v in enumerate(states.column(a), 1) if v) for a in logic.atoms
    }
    partitions = tuple(tuple(blocks[a] for a in ctx) for ctx in logic.contexts)
    return PartitionLogic(logic, len(states), blocks, partitions)


# -- gadgets and implications ------------------------------------------------


class GadgetKind(enum.Enum):
    TITS = "TITS"
    TIFS = "TIFS"
    MIXED = "MIXED"
    VACUOUS = "VACUOUS"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class GadgetRelation:
    premise: str
    conclusion: str
    kind: GadgetKind
    support: int


def _check_atoms(states: StateSet, atoms: Iterable[str]) -> None:
    for a in atoms:
        if a not in states.logic.index:
            raise UnknownAtom(f"unknown atom {a!r}")


def gadget_relation(states: StateSet, premise: str, conclusion: str) -> GadgetRelation:
    """How ``conclusion`` behaves across the states in which ``premise`` is true.

    TITS if it is always true there, TIFS if always false, MIXED otherwise,
    VACUOUS when no state makes the premise true.  ``support`` counts those
    states.
    """
    _check_atoms(states, (premise, conclusion))
    p = states.logic.index[premise]
    c = states.logic.index[conclusion]
    seen = {r[c] for r in states.rows if r[p] == 1}
    support = sum(1 for r in states.rows if r[p] == 1)
    if not seen:
        kind = GadgetKind.VACUOUS
    elif seen == {1}:
        kind = GadgetKind.TITS
    elif seen == {0}:
        kind = GadgetKind.TIFS
    else:
        kind = GadgetKind.MIXED
    return GadgetRelation(premise, conclusion, kind, support)


@dataclass(frozen=True)
class Implication:
    holds: bool
    vacuous: bool
    support: int
    counterexamples: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.holds


def check_implication(states: StateSet, premises: Iterable[str], conclusion: str) -> Implication:
    """Does every state making all ``premises`` true also make ``conclusion`` true?

    Vacuously true (with ``vacuous`` set) when no state satisfies the
    premises.  ``counterexamples`` holds 1-based state indices.
    """
    premises = tuple(premises)
    _check_atoms(states, premises + (conclusion,))
    idx = states.logic.index
    pi = [idx[a] for a in premises]
    c = idx[conclusion]
    support = 0
    bad = []
    for i, r in enumerate(states.rows, 1):
        if all(r[j] for j in pi):
            support += 1
            if not r[c]:
                bad.append(i)
    return Implication(not bad, support == 0, support, tuple(bad))
