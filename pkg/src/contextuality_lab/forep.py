"""Orthogonal representations of logics and Born-rule probabilities.

An orthogonal representation maps every atom to a real unit vector such
that atoms sharing a context get orthogonal vectors.  It is *faithful* when
no other pair is orthogonal and no two distinct atoms share a ray.
"""

from __future__ import annotations

import math
import warnings
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .core import Logic, build_logic
from .errors import (
    BadParams,
    DimensionMismatch,
    EmptyTargets,
    MissingVector,
    NotUnitVector,
)
from .probability import ProbabilityAssignment

DEFAULT_TOL = 1e-9


class PhiOutOfRange(UserWarning):
    """The two-context representation is not faithful outside 0 < phi < pi/2."""


@dataclass(frozen=True)
class OrthoRep:
    dim: int
    vectors: dict[str, np.ndarray]

    def __post_init__(self):
        clean = {}
        for a, v in self.vectors.items():
            arr = np.asarray(v, dtype=float)
            if arr.shape != (self.dim,):
                raise DimensionMismatch(f"vector for {a!r} has shape {arr.shape}, expected ({self.dim},)")
            clean[a] = arr
        object.__setattr__(self, "vectors", clean)

    @classmethod
    def from_vectors(cls, vectors: Mapping[str, Sequence[float]]) -> "OrthoRep":
        if not vectors:
            raise DimensionMismatch("empty representation")
        dims = {len(v) for v in vectors.values()}
        if len(dims) != 1:
            raise DimensionMismatch(f"vectors of differing lengths: {sorted(dims)}")
        return cls(dims.pop(), dict(vectors))

    def __getitem__(self, atom: str) -> np.ndarray:
        try:
            return self.vectors[atom]
        except KeyError:
            raise MissingVector(f"no vector for atom {atom!r}") from None

    def to_lists(self) -> dict[str, list[float]]:
        return {a: [float(x) for x in v] for a, v in self.vectors.items()}


def _require_cover(logic: Logic, rep: OrthoRep) -> None:
    missing = [a for a in logic.atoms if a not in rep.vectors]
    if missing:
        raise MissingVector(f"no vectors for atoms: {', '.join(missing)}")


@dataclass
class OrthogonalityReport:
    non_orthogonal: list[tuple[str, str, float]] = field(default_factory=list)
    non_unit: list[tuple[str, float]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.non_orthogonal and not self.non_unit

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "non_orthogonal_pairs": [[a, b, ip] for a, b, ip in self.non_orthogonal],
            "non_unit_vectors": [[a, n] for a, n in self.non_unit],
        }


@dataclass
class FaithfulnessReport:
    orthogonal_unrelated: list[tuple[str, str]] = field(default_factory=list)
    collinear: list[tuple[str, str]] = field(default_factory=list)

    @property
    def faithful(self) -> bool:
        return not self.orthogonal_unrelated and not self.collinear

    def to_dict(self) -> dict:
        return {
            "faithful": self.faithful,
            "orthogonal_unrelated_pairs": [list(p) for p in self.orthogonal_unrelated],
            "collinear_pairs": [list(p) for p in self.collinear],
        }


def validate_orthogonality(logic: Logic, rep: OrthoRep, tol: float = DEFAULT_TOL) -> OrthogonalityReport:
    """List co-contextual pairs that are not orthogonal and vectors that are not unit length."""
    _require_cover(logic, rep)
    report = OrthogonalityReport()
    for a in logic.atoms:
        n = float(np.linalg.norm(rep[a]))
        if abs(n - 1.0) > tol:
            report.non_unit.append((a, n))
    seen = set()
    for ctx in logic.contexts:
        for i, a in enumerate(ctx):
            for b in ctx[i + 1:]:
                key = (a, b) if logic.index[a] < logic.index[b] else (b, a)
                if key in seen:
                    continue
                seen.add(key)
                ip = float(rep[key[0]] @ rep[key[1]])
                if abs(ip) > tol:
                    report.non_orthogonal.append((key[0], key[1], ip))
    return report


def validate_faithfulness(logic: Logic, rep: OrthoRep, tol: float = DEFAULT_TOL) -> FaithfulnessReport:
    """List orthogonal pairs that share no context and collinear pairs of distinct atoms.

    Meaningful once :func:`validate_orthogonality` passes; it is computed
    regardless.
    """
    _require_cover(logic, rep)
    report = FaithfulnessReport()
    atoms = logic.atoms
    for i, a in enumerate(atoms):
        u = rep[a]
        for b in atoms[i + 1:]:
            v = rep[b]
            ip = float(u @ v)
            nn = float((u @ u) * (v @ v))
            if 1.0 - ip * ip / nn <= tol:
                report.collinear.append((a, b))
            elif abs(ip) <= tol and not logic.share_context(a, b):
                report.orthogonal_unrelated.append((a, b))
    return report


def _unit_state(psi: Sequence[float], dim: int, tol: float) -> np.ndarray:
    arr = np.asarray(psi, dtype=float)
    if arr.shape != (dim,):
        raise DimensionMismatch(f"state vector has shape {arr.shape}, expected ({dim},)")
    if abs(float(arr @ arr) - 1.0) > tol:
        raise NotUnitVector(f"state vector has squared norm {float(arr @ arr)!r}")
    return arr


def born_probabilities(
    logic: Logic, rep: OrthoRep, psi: Sequence[float], tol: float = DEFAULT_TOL
) -> ProbabilityAssignment:
    """q(a) = (psi . v_a)**2 for every atom."""
    _require_cover(logic, rep)
    state = _unit_state(psi, rep.dim, tol)
    return ProbabilityAssignment({a: float(state @ rep[a]) ** 2 for a in logic.atoms})


def max_quantum_value(
    rep: OrthoRep,
    targets: Iterable[str],
    rtol: float = 1e-9,
    max_iter: int = 100_000,
) -> tuple[float, np.ndarray]:
    """Largest eigenvalue of sum_a v_a v_a^T over ``targets`` and a unit eigenvector.

    Equals the maximum over unit psi of sum_a (psi . v_a)**2.  Computed by
    power iteration on the positive semidefinite sum, stopping when the
    eigen-residual ``|M x - value x|`` falls below ``rtol`` times the value.
    """
    targets = list(dict.fromkeys(targets))
    if not targets:
        raise EmptyTargets("no target atoms")
    vecs = np.array([rep[a] for a in targets])
    M = vecs.T @ vecs

    # deterministic start with a component along every coordinate axis
    rng = np.random.default_rng(0)
    x = vecs.sum(axis=0) + 1e-3 * rng.standard_normal(rep.dim) + 1e-3
    x /= np.linalg.norm(x)
    value = float(x @ M @ x)
    for _ in range(max_iter):
        y = M @ x
        ny = np.linalg.norm(y)
        if ny == 0.0:
            break
        x = y / ny
        value = float(x @ M @ x)
        if np.linalg.norm(M @ x - value * x) <= rtol * max(value, 1.0):
            break
    else:
        warnings.warn("power iteration did not converge; result may be inaccurate", RuntimeWarning)
    return value, x


def two_context_rep(phi: float) -> OrthoRep:
    """Vectors for {a,b,c} {a,d,e} in R^3, the second triad rotated by ``phi`` about a.

    a=(0,0,1), b=(0,1,0), c=(1,0,0), d=(cos phi, sin phi, 0),
    e=(-sin phi, cos phi, 0).  Outside 0 < phi < pi/2 the construction is
    returned anyway but a :class:`PhiOutOfRange` warning is issued.
    """
    if not 0 < phi < math.pi / 2:
        warnings.warn(f"phi={phi} outside (0, pi/2): representation is not faithful", PhiOutOfRange)
    c, s = math.cos(phi), math.sin(phi)
    return OrthoRep(
        3,
        {
            "a": np.array([0.0, 0.0, 1.0]),
            "b": np.array([0.0, 1.0, 0.0]),
            "c": np.array([1.0, 0.0, 0.0]),
            "d": np.array([c, s, 0.0]),
            "e": np.array([-s, c, 0.0]),
        },
    )


def _cycle_structure(logic: Logic) -> list[tuple[str, str, str]]:
    """Return contexts of a ring of triads as (shared_in, middle, shared_out)."""
    n = logic.n_contexts
    if n < 3 or any(len(c) != 3 for c in logic.contexts):
        raise BadParams("need a ring of at least three 3-atom contexts")
    sets = logic.context_sets
    out = []
    for k in range(n):
        prev_common = sets[k] & sets[k - 1]
        next_common = sets[k] & sets[(k + 1) % n]
        if len(prev_common) != 1 or len(next_common) != 1 or prev_common == next_common:
            raise BadParams("contexts are not pasted in a ring sharing one atom per neighbour")
        (s_in,) = prev_common
        (s_out,) = next_common
        (mid,) = sets[k] - {s_in, s_out}
        if len(logic.contexts_of[mid]) != 1:
            raise BadParams(f"middle atom {mid!r} lies in more than one context")
        out.append((s_in, mid, s_out))
    return out


def cycle_umbrella_rep(logic: Logic) -> OrthoRep:
    """Orthogonal representation in R^3 of an odd ring of 3-atom contexts.

    The shared atoms are placed on a cone around the z axis, successive ones
    rotated by ``(n-1)pi/n``; the cone's opening angle is found numerically
    as the root of the neighbour-orthogonality condition.  Each middle atom
    gets the normalised cross product of its two shared neighbours.  For
    the pentagon this is Lovasz' umbrella, whose spectral value on the five
    shared atoms is sqrt(5).

    The result should still be checked with :func:`validate_orthogonality`
    and :func:`validate_faithfulness`.
    """
    ring = _cycle_structure(logic)
    n = len(ring)
    if n % 2 == 0:
        raise BadParams("the umbrella construction closes only for an odd number of contexts")
    step = (n - 1) * math.pi / n

    def shared(theta: float, k: int) -> np.ndarray:
        return np.array([math.sin(theta) * math.cos(k * step), math.sin(theta) * math.sin(k * step), math.cos(theta)])

    def neighbour_ip(theta: float) -> float:
        return float(shared(theta, 0) @ shared(theta, 1))

    theta = brentq(neighbour_ip, 1e-6, math.pi / 2 - 1e-6, xtol=1e-15, rtol=1e-15)
    vectors: dict[str, np.ndarray] = {}
    for k, (s_in, _, _) in enumerate(ring):
        vectors[s_in] = shared(theta, k)
    for s_in, mid, s_out in ring:
        w = np.cross(vectors[s_in], vectors[s_out])
        vectors[mid] = w / np.linalg.norm(w)
    return OrthoRep(3, {a: vectors[a] for a in logic.atoms})


def two_context_logic() -> Logic:
    return build_logic([["a", "b", "c"], ["a", "d", "e"]])

