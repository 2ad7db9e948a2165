"""
The pentagon: classical, quantum and exotic probabilities
=========================================================

Five triads pasted in a ring.  The logic is classically embeddable (its
states separate all atoms), yet it carries probability assignments no
classical mixture reproduces.
"""

import math

from contextuality_lab import (
    catalog,
    classify,
    cycle_umbrella_rep,
    enumerate_states,
    in_classical_hull,
    intertwine_list,
    linear_functional_max_classical,
    max_quantum_value,
    validate_faithfulness,
    validate_generalized_state,
    validate_orthogonality,
    wright_state,
)

pent = catalog("pentagon")
states = enumerate_states(pent)
print(len(states), "states;", classify(pent, states).level)

shared = intertwine_list(pent)
print("shared atoms:", shared)

###############################################################################
# Classical bound on the sum of the five shared atoms: a linear functional
# peaks at a vertex of the classical polytope, i.e. at a two-valued state.
print("classical max:", linear_functional_max_classical(states, dict.fromkeys(shared, 1)))

###############################################################################
# Weights 1/2 on the shared atoms and 0 elsewhere sum to one on every
# context, but they lie outside the convex hull of the states (exact LP).
w = wright_state(pent)
print("context sums all 1:", validate_generalized_state(pent, w))
print("in classical hull:", in_classical_hull(states, w).member)

###############################################################################
# A faithful orthogonal representation in R^3 (the "umbrella") and the
# largest eigenvalue of the sum of the shared projectors.
rep = cycle_umbrella_rep(pent)
print("orthogonal:", validate_orthogonality(pent, rep).valid, " faithful:", validate_faithfulness(pent, rep).faithful)
value, psi = max_quantum_value(rep, shared)
print(f"quantum max: {value:.9f}  (sqrt 5 = {math.sqrt(5):.9f})")
print("optimal state:", psi.round(9))
