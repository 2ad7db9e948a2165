"""
Two contexts sharing one atom
=============================

The smallest interesting pasting: {a,b,c} and {a,d,e} glued at ``a``.
We enumerate its two-valued states, read off the partition logic, mix the
states into classical probabilities, and compare with Born-rule
probabilities from an orthogonal representation in R^3.
"""

import math
from fractions import Fraction

from contextuality_lab import (
    born_probabilities,
    catalog,
    classical_mixture,
    enumerate_states,
    partition_logic,
    two_context_rep,
    validate_faithfulness,
)

logic = catalog("two-intertwined")
states = enumerate_states(logic)
print(len(states), "two-valued states")
print(states.table())

###############################################################################
# Each atom becomes the set of states in which it is true; every context
# splits the index set {1..5} into blocks.
print(partition_logic(logic, states).format())

###############################################################################
# Classical probabilities are convex combinations of the five states.
lam = [Fraction(k, 15) for k in (1, 2, 3, 4, 5)]
p = classical_mixture(states, lam)
for atom, value in p.items():
    print(f"p({atom}) = {value}")

###############################################################################
# Quantum probabilities: rotate the second triad by phi about the shared
# vector and project a unit state onto each atom.
phi = math.pi / 5
rep = two_context_rep(phi)
print("faithful:", validate_faithfulness(logic, rep).faithful)
q = born_probabilities(logic, rep, [1 / math.sqrt(3)] * 3)
for atom, value in q.items():
    print(f"q({atom}) = {value:.4f}")
print("q(a)+q(b)+q(c) =", q["a"] + q["b"] + q["c"])
