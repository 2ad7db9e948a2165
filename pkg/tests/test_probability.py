import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from contextuality_lab import (
    catalog,
    classical_mixture,
    enumerate_states,
    in_classical_hull,
    intertwine_list,
    linear_functional_max_classical,
    possibilistic_support,
    validate_generalized_state,
    wright_state,
)
from contextuality_lab.errors import EmptyStateSet, InvalidWeights, LengthMismatch, MissingAtom
from contextuality_lab.probability import ProbabilityAssignment, context_sums
from contextuality_lab.simplex import feasible_point

from conftest import exhaustive_states, pastings


def float_lp_feasible(A, b):
    """Independent floating-point oracle (HiGHS) for A x = b, x >= 0."""
    res = linprog(np.zeros(len(A[0])), A_eq=np.array(A, float), b_eq=np.array(b, float), bounds=(0, None))
    return res.status == 0


def random_weights(rng, n):
    raw = [F(rng.randint(0, 9)) for _ in range(n)]
    if not any(raw):
        raw[0] = F(1)
    total = sum(raw)
    return [w / total for w in raw]


def test_simplex_small_cases():
    assert feasible_point([[1, 1]], [1]) is not None
    assert feasible_point([[1, 1]], [-1]) is None
    x = feasible_point([[1, 2, 0], [0, 1, 1]], [F(3), F(2)])
    assert x[0] + 2 * x[1] == 3 and x[1] + x[2] == 2 and min(x) >= 0
    # redundant equality rows leave an artificial in the basis at level zero
    assert feasible_point([[1, 1], [2, 2]], [1, 2]) is not None
    assert feasible_point([[1, 1], [2, 2]], [1, 3]) is None


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_simplex_agrees_with_float_oracle(m, n, data):
    entries = st.integers(-3, 3)
    A = [[data.draw(entries) for _ in range(n)] for _ in range(m)]
    b = [data.draw(entries) for _ in range(m)]
    x = feasible_point(A, b)
    assert (x is not None) == float_lp_feasible(A, b)
    if x is not None:
        assert all(v >= 0 for v in x)
        assert all(sum(a * v for a, v in zip(row, x)) == bi for row, bi in zip(A, b))


def test_two_intertwined_mixture_matches_published_form():
    S = enumerate_states(catalog("two-intertwined"))
    lam = [F(1, 15), F(2, 15), F(3, 15), F(4, 15), F(5, 15)]
    p = classical_mixture(S, lam)
    assert p["a"] == lam[0]
    assert p["b"] == lam[1] + lam[2]
    assert p["c"] == lam[3] + lam[4]
    assert p["d"] == lam[1] + lam[3]
    assert p["e"] == lam[2] + lam[4]


def test_vertex_mixture_is_the_state():
    S = enumerate_states(catalog("pentagon"))
    for i, s in enumerate(S):
        lam = [F(int(i == j)) for j in range(len(S))]
        assert dict(classical_mixture(S, lam)) == s.as_dict()


def test_uniform_pentagon_mixture_context_sums_exact():
    logic = catalog("pentagon")
    S = enumerate_states(logic)
    p = classical_mixture(S, [F(1, 11)] * 11)
    assert context_sums(logic, p) == [1] * 5
    assert validate_generalized_state(logic, p)
    assert p.exact


def test_mixture_errors():
    S = enumerate_states(catalog("two-intertwined"))
    with pytest.raises(LengthMismatch):
        classical_mixture(S, [1])
    with pytest.raises(InvalidWeights):
        classical_mixture(S, [F(1, 2)] * 5)
    with pytest.raises(InvalidWeights):
        classical_mixture(S, [2, -1, 0, 0, 0])


@pytest.mark.parametrize("name", ["two-intertwined", "three-chain", "pentagon", "cycle(5,3)"])
def test_hull_round_trip(name):
    rng = random.Random(name)
    S = enumerate_states(catalog(name))
    for _ in range(25):
        p = classical_mixture(S, random_weights(rng, len(S)))
        member, lam = in_classical_hull(S, p)
        assert member
        assert classical_mixture(S, lam) == p


def test_hull_vertex_membership():
    S = enumerate_states(catalog("two-intertwined"))
    p = {"a": 1, "b": 0, "c": 0, "d": 0, "e": 0}
    member, lam = in_classical_hull(S, p)
    assert member and lam == [1, 0, 0, 0, 0]


def test_wright_state_outside_hull():
    logic = catalog("pentagon")
    S = enumerate_states(logic)
    w = wright_state(logic)
    assert validate_generalized_state(logic, w)
    assert in_classical_hull(S, w) == (False, None)
    # the shared-atom sum 5/2 exceeds the classical maximum
    coeffs = dict.fromkeys(intertwine_list(logic), 1)
    assert sum(w[a] for a in coeffs) == F(5, 2) > linear_functional_max_classical(S, coeffs)
    A = [[r[j] for r in S.rows] for j in range(logic.n_atoms)] + [[1] * len(S)]
    assert not float_lp_feasible(A, [w[a] for a in logic.atoms] + [1])


def test_hull_errors():
    with pytest.raises(EmptyStateSet):
        in_classical_hull(enumerate_states(catalog("cycle(3,2)")), {"a1": 0, "a2": 0, "a3": 0})
    S = enumerate_states(catalog("two-intertwined"))
    with pytest.raises(MissingAtom):
        in_classical_hull(S, {"a": 1})
    with pytest.raises(TypeError):
        in_classical_hull(S, {"a": 1.0, "b": 0, "c": 0, "d": 0, "e": 0})


def test_generalized_state_checks():
    logic = catalog("pentagon")
    S = enumerate_states(logic)
    for s in S:
        assert validate_generalized_state(logic, s.as_dict())
    assert not validate_generalized_state(logic, dict.fromkeys(logic.atoms, 0))
    floats = {a: float(v) + 1e-12 for a, v in wright_state(logic).items()}
    assert validate_generalized_state(logic, floats, tol=1e-9)
    assert not validate_generalized_state(logic, floats, tol=1e-15)
    with pytest.raises(MissingAtom):
        validate_generalized_state(logic, {"a": 1})


def test_linear_functional_examples():
    pent = catalog("pentagon")
    S = enumerate_states(pent)
    coeffs = dict.fromkeys(intertwine_list(pent), 1)
    brute = max(sum(r[pent.index[a]] for a in coeffs) for r in exhaustive_states(pent))
    assert brute == 2
    assert linear_functional_max_classical(S, coeffs) == 2
    assert linear_functional_max_classical(S, {}) == 0
    T = enumerate_states(catalog("two-intertwined"))
    assert linear_functional_max_classical(T, {"b": 1, "d": 1}) == 2
    with pytest.raises(EmptyStateSet):
        linear_functional_max_classical(enumerate_states(catalog("cycle(3,2)")), {})


@settings(max_examples=60, deadline=None)
@given(pastings(), st.randoms(use_true_random=False))
def test_classical_bound_dominates_mixtures(logic, rng):
    S = enumerate_states(logic)
    if not S:
        return
    coeffs = {a: F(rng.randint(-3, 3)) for a in logic.atoms}
    bound = linear_functional_max_classical(S, coeffs)
    for _ in range(5):
        p = classical_mixture(S, random_weights(rng, len(S)))
        assert sum(coeffs[a] * p[a] for a in logic.atoms) <= bound
        assert validate_generalized_state(logic, p)


def test_possibilistic_support():
    assert possibilistic_support({"a": 0.3, "b": 0}) == {"a": 1, "b": 0}
    S = enumerate_states(catalog("two-intertwined"))
    for s in S:
        assert possibilistic_support(s.as_dict()) == s.as_dict()
    p = classical_mixture(S, [F(1, 5)] * 5)
    support = possibilistic_support(p)
    assert support == dict.fromkeys("abcde", 1)
    assert possibilistic_support(support) == support


def test_probability_assignment_validation():
    with pytest.raises(ValueError):
        ProbabilityAssignment({"a": F(3, 2)})
    assert ProbabilityAssignment({"a": 1 + 1e-12})["a"] > 1
    assert ProbabilityAssignment({"a": "1/2"}) == {"a": F(1, 2)}
