import pytest
from hypothesis import given, settings

from contextuality_lab import (
    GadgetKind,
    Level,
    build_logic,
    catalog,
    check_implication,
    classify,
    enumerate_states,
    gadget_relation,
    is_admissible,
    partition_logic,
)
from contextuality_lab.errors import EmptyStateSet, MissingAtom, UnknownAtom
from contextuality_lab.io import load
from contextuality_lab.states import brute_force_states

from conftest import exhaustive_states, pastings

# Counts frozen from exhaustive_states (2**n assignments through is_admissible).
ORACLE_COUNTS = {"two-intertwined": 5, "three-chain": 8, "pentagon": 11, "cycle(3,2)": 0}


@pytest.mark.parametrize("name, count", ORACLE_COUNTS.items())
def test_state_counts(name, count):
    logic = catalog(name)
    assert len(exhaustive_states(logic)) == count
    S = enumerate_states(logic)
    assert len(S) == count
    assert list(S.rows) == exhaustive_states(logic)


def test_two_intertwined_canonical_order():
    S = enumerate_states(catalog("two-intertwined"))
    assert [s.true_atoms for s in S] == [("a",), ("b", "d"), ("b", "e"), ("c", "d"), ("c", "e")]
    assert S[1]["d"] == 1 and S[1].as_dict()["e"] == 0
    assert S.matrix.shape == (5, 5)
    assert S.table().splitlines()[1].split() == ["1", "1", "0", "0", "0", "0"]


@settings(max_examples=150, deadline=None)
@given(pastings())
def test_backtracking_matches_exhaustive(logic):
    S = enumerate_states(logic)
    assert list(S.rows) == exhaustive_states(logic)
    assert S == brute_force_states(logic)


@settings(max_examples=60, deadline=None)
@given(pastings(max_atoms=30, max_contexts=12))
def test_parallel_enumeration_is_deterministic(logic):
    assert enumerate_states(logic, threads=1) == enumerate_states(logic, threads=3)


def test_parallel_path_on_larger_logic(monkeypatch):
    logic = catalog("cycle(14,3)")
    monkeypatch.setenv("CONTEXTUALITY_LAB_THREADS", "2")
    assert logic.n_atoms >= 24
    assert enumerate_states(logic) == enumerate_states(logic, threads=1)


@pytest.mark.parametrize("n", range(2, 13))
def test_cycle_parity(n):
    assert len(enumerate_states(catalog("cycle", n, 2))) == (0 if n % 2 else 2)


def test_is_admissible():
    logic = catalog("two-intertwined")
    zero = dict.fromkeys(logic.atoms, 0)
    assert is_admissible(logic, {**zero, "a": 1})
    assert not is_admissible(logic, zero)
    assert not is_admissible(logic, {**zero, "b": 1, "c": 1})
    with pytest.raises(MissingAtom):
        is_admissible(logic, {"a": 1})
    with pytest.raises(UnknownAtom):
        is_admissible(logic, {**zero, "a": 1, "q": 0})


@pytest.mark.parametrize(
    "name, level",
    [
        ("two-intertwined", Level.SEPARATING),
        ("pentagon", Level.SEPARATING),
        ("three-chain", Level.SEPARATING),
        ("cycle(3,2)", Level.STATELESS),
        ("cycle(4,2)", Level.UNITAL_INSEPARABLE),
    ],
)
def test_classify_catalog(name, level):
    assert classify(catalog(name)).level is level


def test_classify_fixtures(fixtures):
    insep = classify(load(fixtures / "inseparable.ctx").logic)
    assert insep.level is Level.UNITAL_INSEPARABLE
    assert insep.inseparable_pairs == (("a", "y"), ("x", "z"))
    nonunital = classify(load(fixtures / "nonunital.ctx").logic)
    assert nonunital.level is Level.NONUNITAL
    assert nonunital.nonunital_atoms == ("a", "c")
    assert nonunital.to_dict()["level"] == "NONUNITAL"


@settings(max_examples=150, deadline=None)
@given(pastings())
def test_ladder_and_faithfulness_link(logic):
    S = enumerate_states(logic)
    c = classify(logic, S)
    assert (not c.separating) or c.unital
    assert (not c.unital) or c.nonempty
    assert c.nonempty == (len(S) > 0)
    assert (c.level is Level.STATELESS) == (not c.nonempty)
    if not S:
        return
    P = partition_logic(logic, S)
    full = set(range(1, len(S) + 1))
    for part in P.context_partitions:
        assert sum(len(b) for b in part) == len(S)
        assert set().union(*part) == full
    atoms = logic.atoms
    equal_pairs = {
        (a, b) for i, a in enumerate(atoms) for b in atoms[i + 1:] if P.atom_blocks[a] == P.atom_blocks[b]
    }
    assert equal_pairs == set(c.inseparable_pairs)
    assert {a for a in atoms if not P.atom_blocks[a]} == set(c.nonunital_atoms)


def test_partition_two_intertwined_matches_published_form():
    P = partition_logic(catalog("two-intertwined"))
    assert P.format() == "{{{1},{2,3},{4,5}}, {{1},{2,4},{3,5}}}"
    assert P.atom_blocks["d"] == {2, 4}


def test_partition_small_cases(fixtures):
    P = partition_logic(build_logic([["a", "b"]]))
    assert P.atom_blocks == {"a": {1}, "b": {2}}
    P = partition_logic(load(fixtures / "nonunital.ctx").logic)
    assert P.atom_blocks["a"] == frozenset()
    with pytest.raises(EmptyStateSet):
        partition_logic(catalog("cycle(3,2)"))


def test_gadget_relations():
    S = enumerate_states(catalog("two-intertwined"))
    assert gadget_relation(S, "b", "a").kind is GadgetKind.TIFS
    assert gadget_relation(S, "b", "d").kind is GadgetKind.MIXED
    for atom in "abcde":
        assert gadget_relation(S, atom, atom).kind is GadgetKind.TITS
    with pytest.raises(UnknownAtom):
        gadget_relation(S, "b", "z")


def test_gadget_vacuous_and_asymmetric(fixtures):
    logic = load(fixtures / "nonunital.ctx").logic
    S = enumerate_states(logic)
    assert gadget_relation(S, "a", "d").kind is GadgetKind.VACUOUS
    # TIFS holds both ways round; TITS need not
    S3 = enumerate_states(catalog("three-chain"))
    assert gadget_relation(S3, "b", "a").kind is gadget_relation(S3, "a", "b").kind is GadgetKind.TIFS
    S4 = enumerate_states(build_logic([["p", "m"], ["q", "m", "r"]]))
    assert gadget_relation(S4, "q", "p").kind is GadgetKind.TITS
    assert gadget_relation(S4, "p", "q").kind is GadgetKind.MIXED


def test_three_chain_implication():
    S = enumerate_states(catalog("three-chain"))
    imp = check_implication(S, {"c", "g"}, "d")
    assert imp.holds and not imp.vacuous and imp.support > 0
    weaker = check_implication(S, ["c"], "d")
    assert not weaker
    # the counterexample has c and e true, which forces d false
    bad = S[weaker.counterexamples[0] - 1]
    assert bad["c"] == bad["e"] == 1 and bad["d"] == 0


def test_implication_edge_cases():
    S = enumerate_states(catalog("two-intertwined"))
    assert not check_implication(S, [], "a")
    vac = check_implication(S, ["a", "b"], "c")
    assert vac.holds and vac.vacuous and vac.support == 0
    with pytest.raises(UnknownAtom):
        check_implication(S, ["zz"], "a")
