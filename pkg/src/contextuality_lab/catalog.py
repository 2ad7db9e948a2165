"""Named example logics.

==================  ==================================================
name                contexts
==================  ==================================================
two-intertwined     {a,b,c} {a,d,e}
three-chain         {a,b,c} {a,d,e} {e,f,g}
pentagon            {a,b,c} {c,d,e} {e,f,g} {g,h,i} {i,j,a}
cycle(n,k)          n contexts of k atoms a1, a2, ... pasted in a ring
==================  ==================================================

In ``cycle(n,k)`` context ``i`` (0-based) holds atoms
``a[i(k-1)+1] .. a[i(k-1)+k]``, the last index wrapping to ``a1``, so
adjacent contexts share exactly one atom.  ``cycle(2,2)`` would paste the
same pair twice; it collapses to the single context ``{a1,a2}``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import Logic, build_logic, intertwine_list
from .errors import BadParams, UnknownCatalogName

_FIXED = {
    "two-intertwined": [["a", "b", "c"], ["a", "d", "e"]],
    "three-chain": [["a", "b", "c"], ["a", "d", "e"], ["e", "f", "g"]],
    "pentagon": [
        ["a", "b", "c"],
        ["c", "d", "e"],
        ["e", "f", "g"],
        ["g", "h", "i"],
        ["i", "j", "a"],
    ],
}

NAMES = ("two-intertwined", "three-chain", "pentagon", "cycle")

_CALL_RE = re.compile(r"^\s*([A-Za-z][\w-]*)\s*(?:\(\s*([^)]*)\)|\s*)\s*$")


def cycle_contexts(n: int, k: int) -> list[list[str]]:
    if n < 2 or k < 2:
        raise BadParams(f"cycle needs n >= 2 and k >= 2, got n={n}, k={k}")
    step = k - 1
    total = n * step
    ctxs = []
    for i in range(n):
        idx = [(i * step + j) % total + 1 for j in range(k)]
        ctxs.append([f"a{m}" for m in idx])
    if n == 2 and k == 2:
        return ctxs[:1]
    return ctxs


def parse_name(text: str) -> tuple[str, tuple[int, ...]]:
    """Split ``"cycle(5, 3)"`` into ``("cycle", (5, 3))``."""
    m = _CALL_RE.match(text)
    if not m:
        raise UnknownCatalogName(f"cannot parse catalog name {text!r}")
    name, args = m.group(1), m.group(2)
    params: tuple[int, ...] = ()
    if args is not None and args.strip():
        try:
            params = tuple(int(x) for x in args.split(","))
        except ValueError:
            raise BadParams(f"non-integer parameters in {text!r}") from None
    return name, params


def catalog(name: str, *params: int) -> Logic:
    """Return a built-in logic by name.

    ``name`` may carry its parameters inline (``"cycle(3,2)"``) or they may
    be passed positionally (``catalog("cycle", 3, 2)``).
    """
    base, inline = parse_name(name)
    if inline and params:
        raise BadParams("parameters given both inline and positionally")
    params = inline or tuple(params)
    if base in _FIXED:
        if params:
            raise BadParams(f"{base} takes no parameters")
        return build_logic(_FIXED[base])
    if base == "cycle":
        if len(params) != 2:
            raise BadParams("cycle takes exactly two parameters (n, k)")
        n, k = params
        logic = build_logic(cycle_contexts(n, k))
        if n == 2 and k == 2:
            note = "cycle(2,2) pastes one pair twice; collapsed to a single context"
            logic = Logic(logic.atoms, logic.contexts, logic.warnings + (note,))
        return logic
    raise UnknownCatalogName(f"unknown catalog logic {name!r}; known: {', '.join(NAMES)}")


def wright_state(logic: Logic | None = None) -> dict[str, Fraction]:
    """The dispersion-free pentagon weights: 1/2 on every shared atom, 0 elsewhere.

    Every context of the pentagon contains two shared atoms and one
    unshared one, so the weights sum to 1 on each context although no
    mixture of two-valued states produces them.
    """
    logic = logic if logic is not None else catalog("pentagon")
    shared = set(intertwine_list(logic))
    return {a: Fraction(1, 2) if a in shared else Fraction(0) for a in logic.atoms}
