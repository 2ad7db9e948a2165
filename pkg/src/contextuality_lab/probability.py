"""Classical mixtures of two-valued states and related checks.

Probabilities are kept exact (:class:`fractions.Fraction`) whenever the
inputs are rational; Born-rule values from :mod:`contextuality_lab.forep`
are floats and pass through the same containers.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from fractions import Fraction
from numbers import Rational, Real
from typing import NamedTuple

from .core import Logic
from .errors import EmptyStateSet, InvalidWeights, LengthMismatch, MissingAtom, UnknownAtom
from .simplex import feasible_point
from .states import StateSet

Number = Fraction | float


def _is_exact(v) -> bool:
    return isinstance(v, Rational)


def to_number(v) -> Number:
    """Coerce ints, Fractions, decimal/rational strings and floats."""
    if isinstance(v, bool):
        raise TypeError("booleans are not probabilities")
    if isinstance(v, Rational):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v.strip())
    if isinstance(v, Real):
        return float(v)
    raise TypeError(f"not a number: {v!r}")


class ProbabilityAssignment(Mapping):
    """Atom id -> probability in [0, 1], in canonical atom order.

    Float values may overshoot the unit interval by ``slack`` (rounding in
    Born-rule sums); exact values may not.
    """

    def __init__(self, values: Mapping[str, object], slack: float = 1e-9):
        self._values: dict[str, Number] = {}
        for a, v in values.items():
            x = to_number(v)
            lo, hi = (0, 1) if _is_exact(x) else (-slack, 1 + slack)
            if not lo <= x <= hi:
                raise ValueError(f"probability of {a!r} outside [0,1]: {v}")
            self._values[a] = x

    def __getitem__(self, atom: str) -> Number:
        return self._values[atom]

    def __iter__(self) -> Iterator[str]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Mapping):
            return dict(self._values) == dict(other)
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(f"{a}: {v}" for a, v in self._values.items())
        return f"ProbabilityAssignment({{{body}}})"

    @property
    def exact(self) -> bool:
        return all(_is_exact(v) for v in self._values.values())


def _require_total(logic: Logic, values: Mapping[str, object]) -> None:
    missing = [a for a in logic.atoms if a not in values]
    if missing:
        raise MissingAtom(f"missing atoms: {', '.join(missing)}")
    extra = [a for a in values if a not in logic.index]
    if extra:
        raise UnknownAtom(f"unknown atoms: {', '.join(map(str, extra))}")


def validate_weights(weights: Sequence[object], n: int) -> list[Number]:
    if len(weights) != n:
        raise LengthMismatch(f"{len(weights)} weights for {n} states")
    lam = [to_number(w) for w in weights]
    if any(w < 0 for w in lam):
        raise InvalidWeights("weights must be nonnegative")
    total = sum(lam)
    exact = all(_is_exact(w) for w in lam)
    if (exact and total != 1) or (not exact and abs(total - 1) > 1e-12):
        raise InvalidWeights(f"weights sum to {total}, not 1")
    return lam


def classical_mixture(states: StateSet, weights: Sequence[object]) -> ProbabilityAssignment:
    """p(a) = sum_i weights[i] * s_i(a).

    Weights follow the order of ``states``; zero weights are allowed (closed
    convex hull).
    """
    lam = validate_weights(weights, len(states))
    atoms = states.logic.atoms
    probs = {a: sum((w for w, r in zip(lam, states.rows) if r[j]), Fraction(0)) for j, a in enumerate(atoms)}
    return ProbabilityAssignment(probs)


def context_sums(logic: Logic, values: Mapping[str, object]) -> list[Number]:
    _require_total(logic, values)
    vals = {a: to_number(values[a]) for a in logic.atoms}
    return [sum((vals[a] for a in ctx), Fraction(0)) for ctx in logic.contexts]


class HullResult(NamedTuple):
    member: bool
    weights: list[Fraction] | None


def in_classical_hull(states: StateSet, p: Mapping[str, object]) -> HullResult:
    """Exact decision: is ``p`` a convex combination of the two-valued states?

    Solves ``sum_i lam_i s_i(a) = p(a)`` for every atom, ``sum_i lam_i = 1``,
    ``lam >= 0`` with rational simplex.  Returns ``(True, lam)`` with a
    witness, or ``(False, None)``.
    """
    logic = states.logic
    if len(states) == 0:
        raise EmptyStateSet("no two-valued states: the classical hull is empty")
    _require_total(logic, p)
    target = [to_number(p[a]) for a in logic.atoms]
    if not all(_is_exact(v) for v in target):
        raise TypeError("hull membership needs exact rational probabilities")
    A = [[r[j] for r in states.rows] for j in range(logic.n_atoms)]
    A.append([1] * len(states))
    lam = feasible_point(A, target + [Fraction(1)])
    if lam is None:
        return HullResult(False, None)
    return HullResult(True, lam)


def validate_generalized_state(logic: Logic, weights: Mapping[str, object], tol: float = 1e-9) -> bool:
    """Weights in [0,1] summing to 1 on every context.

    Exact inputs are checked exactly and ``tol`` is ignored.
    """
    _require_total(logic, weights)
    vals = [to_number(weights[a]) for a in logic.atoms]
    exact = all(_is_exact(v) for v in vals)
    if exact:
        if any(not 0 <= v <= 1 for v in vals):
            return False
        return all(s == 1 for s in context_sums(logic, weights))
    if any(not -tol <= v <= 1 + tol for v in vals):
        return False
    return all(abs(s - 1) <= tol for s in context_sums(logic, weights))


def linear_functional_max_classical(states: StateSet, coeffs: Mapping[str, object]) -> Number:
    """Maximum of sum_a coeffs[a] * s(a) over the two-valued states.

    A linear functional attains its maximum over the classical polytope at a
    vertex, so this is also the bound over all classical mixtures.  Atoms
    absent from ``coeffs`` get coefficient 0.
    """
    if len(states) == 0:
        raise EmptyStateSet("no two-valued states")
    idx = states.logic.index
    terms = []
    for a, c in coeffs.items():
        if a not in idx:
            raise UnknownAtom(f"unknown atom {a!r}")
        terms.append((idx[a], to_number(c)))
    return max(sum((c for j, c in terms if r[j]), Fraction(0)) for r in states.rows)


def possibilistic_support(p: Mapping[str, object]) -> dict[str, int]:
    """Collapse a distribution to its support: nonzero -> 1, zero -> 0."""
    return {a: int(to_number(v) > 0) for a, v in p.items()}
