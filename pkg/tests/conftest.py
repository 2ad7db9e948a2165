from __future__ import annotations

import itertools
from pathlib import Path

import pytest
from hypothesis import strategies as st

from contextuality_lab import build_logic, is_admissible

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


def exhaustive_states(logic):
    """Oracle: every 0/1 assignment that passes is_admissible, in canonical order."""
    rows = []
    for bits in itertools.product((0, 1), repeat=logic.n_atoms):
        if is_admissible(logic, dict(zip(logic.atoms, bits))):
            rows.append(bits)
    return sorted(rows, reverse=True)


@st.composite
def pastings(draw, max_atoms: int = 10, max_contexts: int = 5, max_size: int = 4):
    """Random pastings: contexts drawn from a small pool of atom names."""
    pool = [f"x{i}" for i in range(draw(st.integers(2, max_atoms)))]
    n_ctx = draw(st.integers(1, max_contexts))
    contexts = []
    for _ in range(n_ctx):
        size = draw(st.integers(2, min(max_size, len(pool))))
        ctx = draw(st.lists(st.sampled_from(pool), min_size=size, max_size=size, unique=True))
        if frozenset(ctx) not in {frozenset(c) for c in contexts}:
            contexts.append(ctx)
    return build_logic(contexts)


# acceptance criteria outcomes, reported in the terminal summary
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0][2:])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
