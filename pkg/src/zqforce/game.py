"""Exact Z_q via adversarial game search over filled-set states.

The game value V(F) of a filled set F is the minimum number of tokens the
player still has to spend against a worst-case oracle:

    V(V(G)) = 0
    V(F) = min over
        (a) 1 + V(F + v)          for every unfilled v            [token]
        (b) V(F + target)         for every applicable force      [force]
        (c) max over reveals L of the announcement's successors   [announce]

States are bitmasks, the value table is memoized on the filled set alone,
and both players' optimizers are recorded so optimal play can be replayed.

An announcement is discarded when some nonempty reveal admits no force in
the revealed subgraph: the oracle would pick that reveal and the state would
not change, so the move is a value-neutral self-loop. Announcing more than
q+1 components only enlarges the oracle's choice set and can never help the
player, so the search enumerates announcements of exactly q+1 components;
`legal_announcements` still reports every unpruned size for the API.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .certificates import (
    AnnounceMove,
    Certificate,
    ForceMove,
    RevealMove,
    TokenMove,
    format_certificate,
)
from .errors import (
    GraphValidationError,
    OracleProtocolError,
    ResourceLimitError,
)
from .graphs import Graph, _check_vertex_subset, is_connected, unfilled_components

MODE_CLOSURE = "closure"
MODE_SINGLE_FORCE = "single_force"

DEFAULT_VERTEX_CAP = 16
DEFAULT_MEMO_LIMIT = 1 << 26


@dataclass(frozen=True)
class GameConfig:
    q: int
    rule3_mode: str = MODE_CLOSURE
    vertex_cap: int = DEFAULT_VERTEX_CAP
    memo_limit: int = DEFAULT_MEMO_LIMIT

    def __post_init__(self):
        if self.q < 0:
            raise GraphValidationError("q must be nonnegative")
        if self.rule3_mode not in (MODE_CLOSURE, MODE_SINGLE_FORCE):
            raise GraphValidationError(f"unknown rule3_mode {self.rule3_mode!r}")
        if not (1 <= self.vertex_cap <= 64):
            raise GraphValidationError("vertex_cap must be in 1..64")
        if self.memo_limit < 1:
            raise GraphValidationError("memo_limit must be positive")


@dataclass
class GameSolution:
    """Value table plus both players' optimal strategies.

    States and components are vertex bitmasks. best_move maps a state to
    ("token", v) | ("force", u, v) | ("announce", component masks);
    oracle_response maps (state, announcement) to the worst-case reveal.
    """

    value: int
    best_move: dict
    oracle_response: dict
    values: dict
    states_explored: int
    q: int
    rule3_mode: str
    graph: Graph


def vertices_to_mask(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_to_vertices(mask: int) -> frozenset:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def _adjacency_masks(g: Graph) -> list:
    return [vertices_to_mask(g.adjacency[v]) for v in range(g.n)]


def _mask_components(masks, live: int) -> list:
    """Connected components of the subgraph induced on the `live` mask,
    ordered by lowest vertex."""
    comps = []
    rest = live
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                grow |= masks[low.bit_length() - 1]
            frontier = grow & live & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _window_forces(masks, filled: int, window: int) -> list:
    """Forces (u, target) legal inside `window`: neighbors outside the window
    are ignored when counting a source's unfilled neighbors."""
    out = []
    m = filled
    while m:
        low = m & -m
        m ^= low
        u = low.bit_length() - 1
        cand = masks[u] & window & ~filled
        if cand and not (cand & (cand - 1)):
            out.append((u, cand.bit_length() - 1))
    return out


def _window_closure(masks, filled: int, window: int) -> int:
    changed = True
    while changed:
        changed = False
        m = filled
        while m:
            low = m & -m
            m ^= low
            cand = masks[low.bit_length() - 1] & window & ~filled
            if cand and not (cand & (cand - 1)):
                filled |= cand
                changed = True
    return filled


def _components_as_sets(comps) -> tuple:
    return tuple(mask_to_vertices(c) for c in comps)


def legal_announcements(g: Graph, filled, q: int) -> list:
    """Announcements legal at `filled`: if the unfilled subgraph has k > q
    components, every subset of at least q+1 of them survives unless some
    nonempty reveal of it admits no force (the dead-reveal rule). Returned
    in increasing size, components ordered by lowest vertex."""
    _check_vertex_subset(g, filled)
    filled_mask = vertices_to_mask(filled)
    masks = _adjacency_masks(g)
    full = (1 << g.n) - 1
    comps = _mask_components(masks, full & ~filled_mask)
    k = len(comps)
    if k <= q:
        return []
    out = []
    for size in range(q + 1, k + 1):
        for combo in combinations(comps, size):
            if not _announcement_dead(masks, filled_mask, combo):
                out.append(_components_as_sets(combo))
    return out


def _announcement_dead(masks, filled: int, combo) -> bool:
    for sub in range(1, 1 << len(combo)):
        union = 0
        for j, comp in enumerate(combo):
            if sub >> j & 1:
                union |= comp
        if not _window_forces(masks, filled, filled | union):
            return True
    return False


def reveal_outcomes(g: Graph, filled, announcement, mode: str = MODE_CLOSURE) -> dict:
    """Successor filled sets per oracle reveal for a given announcement.

    Keys are reveals (tuples of components); values list the reachable
    successor sets: the single in-window closure in closure mode, or one
    successor per distinct force target in single_force mode. A reveal with
    no applicable force maps to an empty list.
    """
    if mode not in (MODE_CLOSURE, MODE_SINGLE_FORCE):
        raise GraphValidationError(f"unknown rule3_mode {mode!r}")
    filled = frozenset(filled)
    actual = set(unfilled_components(g, filled))
    announced = [frozenset(c) for c in announcement]
    for comp in announced:
        if comp not in actual:
            raise GraphValidationError(f"announced set {sorted(comp)} is not an unfilled component")
    masks = _adjacency_masks(g)
    filled_mask = vertices_to_mask(filled)
    outcomes = {}
    for sub in range(1, 1 << len(announced)):
        reveal = tuple(c for j, c in enumerate(announced) if sub >> j & 1)
        union = vertices_to_mask(frozenset().union(*reveal))
        window = filled_mask | union
        if mode == MODE_CLOSURE:
            closed = _window_closure(masks, filled_mask, window)
            succ = [mask_to_vertices(closed)] if closed != filled_mask else []
        else:
            targets = sorted({t for _, t in _window_forces(masks, filled_mask, window)})
            succ = [mask_to_vertices(filled_mask | (1 << t)) for t in targets]
        outcomes[reveal] = succ
    return outcomes


def solve_zq(g: Graph, cfg: GameConfig) -> GameSolution:
    """Exact game value and optimal strategies for both sides.

    Ties between optimal player moves break by move kind (force, then
    announce, then token) and lexicographically inside a kind, so traces are
    reproducible and prefer free moves.
    """
    n = g.n
    if n > cfg.vertex_cap:
        raise ResourceLimitError(f"n={n} exceeds vertex cap {cfg.vertex_cap}; raise the cap to allow this")
    if not is_connected(g):
        raise GraphValidationError("solve_zq requires a connected graph")

    masks = _adjacency_masks(g)
    full = (1 << n) - 1
    q = cfg.q
    closure_mode = cfg.rule3_mode == MODE_CLOSURE
    memo_limit = cfg.memo_limit
    memo = {full: 0}
    best = {}
    oracle = {}

    def value(filled: int) -> int:
        cached = memo.get(filled)
        if cached is not None:
            return cached
        if len(memo) >= memo_limit:
            raise ResourceLimitError(f"memo limit {memo_limit} reached; raise memo_limit to continue")

        best_val = n + 1
        best_kind = 3
        best_key = None
        unfilled = full & ~filled
        forced_targets = 0

        # Rule 2: each applicable force is its own move.
        m = filled
        while m:
            low = m & -m
            m ^= low
            u = low.bit_length() - 1
            cand = masks[u] & unfilled
            if cand and not (cand & (cand - 1)):
                forced_targets |= cand
                val = value(filled | cand)
                key = (u, cand.bit_length() - 1)
                if val < best_val or (val == best_val and (0, key) < (best_kind, best_key)):
                    best_val, best_kind, best_key = val, 0, key

        # Rule 3: announcements of exactly q+1 unfilled components.
        if unfilled.bit_count() > q:
            comps = _mask_components(masks, unfilled)
            k = len(comps)
            if k > q:
                reveal_cache = {}
                for combo in combinations(comps, q + 1):
                    worst = -1
                    worst_reveal = None
                    dead = False
                    for sub in range(1, 1 << (q + 1)):
                        union = 0
                        for j in range(q + 1):
                            if sub >> j & 1:
                                union |= combo[j]
                        res = reveal_cache.get(union)
                        if res is None:
                            res = _reveal_value(filled, union)
                            reveal_cache[union] = res
                        if res < 0:
                            dead = True
                            break
                        if res > worst:
                            worst = res
                            worst_reveal = tuple(c for j, c in enumerate(combo) if sub >> j & 1)
                    if dead:
                        continue
                    oracle[(filled, combo)] = worst_reveal
                    if worst < best_val or (worst == best_val and (1, combo) < (best_kind, best_key)):
                        best_val, best_kind, best_key = worst, 1, combo

        # Rule 1: tokens. A token on a force target is dominated by the force.
        m = unfilled & ~forced_targets
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            val = 1 + value(filled | low)
            if val < best_val or (val == best_val and (2, (v,)) < (best_kind, best_key)):
                best_val, best_kind, best_key = val, 2, (v,)

        memo[filled] = best_val
        if best_kind == 0:
            best[filled] = ("force",) + best_key
        elif best_kind == 1:
            best[filled] = ("announce", best_key)
        else:
            best[filled] = ("token", best_key[0])
        return best_val

    def _reveal_value(filled: int, union: int) -> int:
        """Player's best continuation value after a reveal; -1 if the reveal
        admits no force (a dead reveal)."""
        window = filled | union
        if closure_mode:
            closed = _window_closure(masks, filled, window)
            if closed == filled:
                return -1
            return value(closed)
        best_succ = -1
        m = filled
        while m:
            low = m & -m
            m ^= low
            cand = masks[low.bit_length() - 1] & window & ~filled
            if cand and not (cand & (cand - 1)):
                val = value(filled | cand)
                if best_succ < 0 or val < best_succ:
                    best_succ = val
        return best_succ

    total = value(0)
    return GameSolution(
        value=total,
        best_move=best,
        oracle_response=oracle,
        values=memo,
        states_explored=len(memo),
        q=q,
        rule3_mode=cfg.rule3_mode,
        graph=g,
    )


def adversarial_oracle(sol: GameSolution):
    """The solver's recorded worst-case oracle as a reveal policy."""

    def policy(filled, announcement):
        state = vertices_to_mask(filled)
        key = (state, tuple(vertices_to_mask(c) for c in announcement))
        reveal = sol.oracle_response.get(key)
        if reveal is None:
            raise OracleProtocolError("announcement was never evaluated by the solver")
        return tuple(mask_to_vertices(c) for c in reveal)

    return policy


def extract_player_trace(g: Graph, sol: GameSolution, oracle=None) -> Certificate:
    """Play the recorded best moves against an oracle policy.

    The policy is a callable (filled set, announced components) -> revealed
    components; by default the solver's own adversarial oracle. The result
    spends exactly sol.value tokens against that default and never more than
    sol.value against any legal oracle.
    """
    if oracle is None:
        oracle = adversarial_oracle(sol)
    masks = _adjacency_masks(g)
    full = (1 << g.n) - 1
    closure_mode = sol.rule3_mode == MODE_CLOSURE
    state = 0
    trace = []
    tokens = []
    while state != full:
        move = sol.best_move[state]
        kind = move[0]
        if kind == "token":
            v = move[1]
            tokens.append(v)
            trace.append(TokenMove(v))
            state |= 1 << v
        elif kind == "force":
            _, u, t = move
            trace.append(ForceMove(u, t))
            state |= 1 << t
        else:
            announced_masks = move[1]
            announced = tuple(mask_to_vertices(c) for c in announced_masks)
            trace.append(AnnounceMove(announced))
            step = len(trace) - 1
            reveal = tuple(frozenset(c) for c in oracle(mask_to_vertices(state), announced))
            if not reveal or len(set(reveal)) != len(reveal) or not set(reveal) <= set(announced):
                raise OracleProtocolError(
                    f"step {step}: oracle reveal must be a nonempty subset of the announcement"
                )
            trace.append(RevealMove(reveal))
            union = vertices_to_mask(frozenset().union(*reveal))
            window = state | union
            if closure_mode:
                # Record the in-window forces in a deterministic order.
                while True:
                    forces = _window_forces(masks, state, window)
                    if not forces:
                        break
                    u, t = forces[0]
                    trace.append(ForceMove(u, t))
                    state |= 1 << t
            else:
                forces = _window_forces(masks, state, window)
                if not forces:
                    raise OracleProtocolError(f"step {step}: reveal admits no force")
                u, t = min(forces, key=lambda f: (sol.values[state | (1 << f[1])], f))
                trace.append(ForceMove(u, t))
                state |= 1 << t
    return Certificate(tokens=frozenset(tokens), trace=tuple(trace))


def solution_report(sol: GameSolution, cert: Certificate | None = None) -> dict:
    """JSON-ready report: {value, states_explored, q, rule3_mode, trace}."""
    if cert is None:
        cert = extract_player_trace(sol.graph, sol)
    return {
        "value": sol.value,
        "states_explored": sol.states_explored,
        "q": sol.q,
        "rule3_mode": sol.rule3_mode,
        "trace": format_certificate(cert).splitlines(),
    }
