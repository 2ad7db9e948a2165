"""
Climbing down the ladder of non-classicality
============================================

Logics are ranked by what their two-valued states can do: separate every
pair of atoms, merely cover every atom, exist at all, or not exist.
"""

from pathlib import Path

from contextuality_lab import (
    build_logic,
    catalog,
    check_implication,
    classical_mixture,
    classify,
    enumerate_states,
    gadget_relation,
    possibilistic_support,
)
from contextuality_lab.io import load

fixtures = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

examples = {
    "pentagon": catalog("pentagon"),
    "cycle(4,2)": catalog("cycle(4,2)"),
    "inseparable.ctx": load(fixtures / "inseparable.ctx").logic,
    "nonunital.ctx": load(fixtures / "nonunital.ctx").logic,
    "cycle(5,2)": catalog("cycle(5,2)"),
}
for name, logic in examples.items():
    c = classify(logic)
    print(f"{name:16s} {c.level!s:20s} states={c.n_states}", end="")
    if c.nonunital_atoms:
        print("  never true:", ",".join(c.nonunital_atoms), end="")
    if c.inseparable_pairs and c.nonempty:
        print("  inseparable:", c.inseparable_pairs, end="")
    print()

###############################################################################
# Odd rings of two-atom contexts have no states at all: going round the ring
# flips the value an odd number of times.
for n in range(2, 9):
    print(f"cycle({n},2): {len(enumerate_states(catalog('cycle', n, 2)))} states")

###############################################################################
# Implications carried by the states of three chained triads.
chain = catalog("three-chain")
S = enumerate_states(chain)
print("c and g imply d:", bool(check_implication(S, ["c", "g"], "d")))
print("c alone implies d:", bool(check_implication(S, ["c"], "d")))

###############################################################################
# True-implies-true is directional; true-implies-false is symmetric.
tits = enumerate_states(build_logic([["p", "m"], ["q", "m", "r"]]))
print("q -> p:", gadget_relation(tits, "q", "p").kind, "  p -> q:", gadget_relation(tits, "p", "q").kind)
print("b -> a:", gadget_relation(S, "b", "a").kind, "  a -> b:", gadget_relation(S, "a", "b").kind)

###############################################################################
# Collapsing a distribution to its support forgets which states carried it:
# every fully mixed distribution on the chain collapses to all ones.
p = classical_mixture(S, [1 / len(S)] * len(S))
print("support of the uniform mixture:", possibilistic_support(p))
