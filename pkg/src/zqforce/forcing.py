"""Standard zero forcing: applicable forces, closure, and a brute-force
oracle for the zero forcing number Z.

A filled vertex with a unique unfilled neighbor forces that neighbor; the
closure iterates this to a fixed point. The closure is confluent, so the
resulting set does not depend on force order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import ScopeError
from .graphs import Graph, _check_vertex_subset

BRUTE_FORCE_CAP = 20


@dataclass(frozen=True)
class Force:
    source: int
    target: int


def applicable_forces(g: Graph, filled) -> list:
    """All forces (u, v) with u filled and v its unique unfilled neighbor,
    sorted by (source, target)."""
    filled = frozenset(filled)
    _check_vertex_subset(g, filled)
    out = []
    for u in sorted(filled):
        unfilled = [w for w in g.adjacency[u] if w not in filled]
        if len(unfilled) == 1:
            out.append(Force(u, unfilled[0]))
    return out


def closure_with_forces(g: Graph, filled) -> tuple:
    """Forcing closure plus one legal force sequence that realizes it.

    Work-queue over potential sources, O(n + m) total: a vertex forces at
    most once, and each fill decrements its neighbors' unfilled counts.
    """
    filled = frozenset(filled)
    _check_vertex_subset(g, filled)
    mark = bytearray(g.n)
    for v in filled:
        mark[v] = 1
    unfilled_count = [sum(1 - mark[w] for w in g.adjacency[v]) for v in range(g.n)]
    queue = deque(v for v in sorted(filled) if unfilled_count[v] == 1)
    forces = []
    while queue:
        u = queue.popleft()
        if unfilled_count[u] != 1:
            continue  # stale entry
        t = next(w for w in g.adjacency[u] if not mark[w])
        forces.append(Force(u, t))
        mark[t] = 1
        if unfilled_count[t] == 1:
            queue.append(t)
        for w in g.adjacency[t]:
            unfilled_count[w] -= 1
            if mark[w] and unfilled_count[w] == 1:
                queue.append(w)
    result = frozenset(v for v in range(g.n) if mark[v])
    return result, forces


def forcing_closure(g: Graph, filled) -> frozenset:
    """Least fixed point of repeated forcing from `filled`."""
    return closure_with_forces(g, filled)[0]


def is_zero_forcing_set(g: Graph, s) -> bool:
    return forcing_closure(g, s) == frozenset(range(g.n))


def brute_force_Z(g: Graph, cap: int = BRUTE_FORCE_CAP) -> tuple:
    """Exhaustive zero forcing number: smallest k admitting a zero forcing
    set of size k, with the lexicographically first witness of that size.

    Subsets are enumerated by increasing size with no structural pruning;
    the cap keeps the runtime bounded.
    """
    if g.n > cap:
        raise ScopeError(f"brute_force_Z refused: n={g.n} exceeds cap {cap}")
    everything = frozenset(range(g.n))
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            if forcing_closure(g, combo) == everything:
                return k, frozenset(combo)
    raise AssertionError("the full vertex set is always a zero forcing set")
