import pytest
from hypothesis import given
from hypothesis import strategies as st

from contextuality_lab import build_logic, catalog, intertwine_atoms
from contextuality_lab.catalog import cycle_contexts, parse_name
from contextuality_lab.errors import (
    BadParams,
    DuplicateAtomInContext,
    DuplicateContext,
    EmptyContext,
    UnknownAtom,
    UnknownCatalogName,
)

from conftest import pastings


def test_two_intertwined_build():
    logic = build_logic([["a", "b", "c"], ["a", "d", "e"]])
    assert logic.atoms == ("a", "b", "c", "d", "e")
    assert logic.n_contexts == 2
    assert intertwine_atoms(logic) == {"a"}
    assert logic.warnings == ()


def test_minimal_logic():
    logic = build_logic([["a", "b"]])
    assert logic.n_atoms == 2 and logic.n_contexts == 1
    assert intertwine_atoms(logic) == frozenset()


@pytest.mark.parametrize(
    "contexts, error",
    [
        ([["a", "b", "c"], ["a", "b", "c"]], DuplicateContext),
        ([["a", "b", "c"], ["c", "b", "a"]], DuplicateContext),
        ([["a"]], EmptyContext),
        ([[]], EmptyContext),
        ([["a", "a"]], DuplicateAtomInContext),
        ([["a", "b c"]], EmptyContext),
    ],
)
def test_build_errors(contexts, error):
    with pytest.raises(error):
        build_logic(contexts)


def test_subset_and_overlap_warnings():
    assert any("subset" in w for w in build_logic([["a", "b"], ["a", "b", "c"]]).warnings)
    logic = build_logic([["a", "b", "c"], ["a", "b", "d"]])
    assert logic.warnings == ("contexts 1 and 2 share 2 atoms",)
    # warnings are not part of identity
    assert logic == build_logic(logic.contexts)


def test_first_appearance_order():
    logic = build_logic([["z", "y"], ["y", "a", "m"]])
    assert logic.atoms == ("z", "y", "a", "m")
    assert logic.contexts_of["y"] == (0, 1)
    assert logic.neighbours("y") == ("z", "a", "m")
    with pytest.raises(UnknownAtom):
        logic.atom_index("q")


@given(pastings())
def test_rebuild_is_identity(logic):
    again = build_logic(logic.contexts)
    assert again == logic
    assert again.atoms == logic.atoms and again.contexts == logic.contexts


def test_catalog_fixed():
    assert catalog("two-intertwined").contexts == (("a", "b", "c"), ("a", "d", "e"))
    assert catalog("three-chain").contexts[-1] == ("e", "f", "g")
    pent = catalog("pentagon")
    assert (pent.n_atoms, pent.n_contexts) == (10, 5)
    assert all(len(c) == 3 for c in pent.contexts)
    assert intertwine_atoms(pent) == {"a", "c", "e", "g", "i"}


def test_cycle_generator():
    assert catalog("cycle(3,2)").contexts == (("a1", "a2"), ("a2", "a3"), ("a3", "a1"))
    assert catalog("cycle", 3, 2) == catalog("cycle(3, 2)")
    assert cycle_contexts(2, 3) == [["a1", "a2", "a3"], ["a3", "a4", "a1"]]
    collapsed = catalog("cycle(2,2)")
    assert collapsed.contexts == (("a1", "a2"),)
    assert collapsed.warnings


@pytest.mark.parametrize("name", ["pentagon(2)", "cycle(1,3)", "cycle(3,1)", "cycle(3)", "cycle(a,b)"])
def test_catalog_bad_params(name):
    with pytest.raises(BadParams):
        catalog(name)


@pytest.mark.parametrize("name", ["hexagon", "cycle[3,2]", ""])
def test_catalog_unknown(name):
    with pytest.raises(UnknownCatalogName):
        catalog(name)


def test_parse_name():
    assert parse_name("cycle(5, 3)") == ("cycle", (5, 3))
    assert parse_name("pentagon") == ("pentagon", ())


@given(st.integers(2, 9), st.integers(2, 6))
def test_catalog_cycles_validate(n, k):
    logic = catalog("cycle", n, k)
    assert build_logic(logic.contexts) == logic
    if (n, k) != (2, 2):
        assert logic.n_contexts == n
        assert logic.n_atoms == n * (k - 1)
    if n >= 3:
        assert len(intertwine_atoms(logic)) == n
