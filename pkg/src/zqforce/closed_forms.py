"""Constant-time Z_q values for generalized stars and windmill graphs.

Windmill parameters follow the family generators: eta copies of the complete
graph K_k, each vertex joined to all l central vertices; Type I makes the
center a clique, Type II leaves it independent.
"""

from __future__ import annotations

from .errors import GraphValidationError, ScopeError


def _validate_q(q: int):
    if q < 0:
        raise GraphValidationError("q must be nonnegative")


def star_Zq(path_lengths, q: int) -> int:
    """Z_q of a generalized star with the given arm lengths.

    One token suffices at q=0; otherwise tokens go on all leaves but one.
    With fewer than three arms the graph is a path, so the value is 1.
    """
    _validate_q(q)
    lengths = list(path_lengths)
    if not lengths:
        raise GraphValidationError("generalized star needs at least one arm")
    if any(x < 1 for x in lengths):
        raise GraphValidationError("arm lengths must be >= 1")
    if q == 0:
        return 1
    return max(1, len(lengths) - 1)


def windmill_I_Zq(eta: int, k: int, l: int, q: int) -> int:
    """Z_q of the Type I windmill W'(eta, k, l)."""
    _validate_params(eta, k, l, q)
    if k > 1:
        return eta * (k - 1) + l
    if eta == 1:
        # W'(1, 1, l) is the clique K_{l+1}; l tokens for every q.
        return l
    if q > 0:
        return l + eta - 2
    return l


def windmill_II_Zq(eta: int, k: int, l: int, q: int) -> int:
    """Z_q of the Type II windmill W''(eta, k, l).

    Degenerate shapes collapse onto Type I: a single clique copy gives
    W''(1, k, l) = W'(l, 1, k), and a single center gives
    W''(eta, k, 1) = W'(eta, k, 1). The k=1 case with eta, l > 1 is the
    complete bipartite graph, whose value this package does not compute.
    """
    _validate_params(eta, k, l, q)
    if eta == 1:
        return windmill_I_Zq(l, 1, k, q)
    if l == 1:
        return windmill_I_Zq(eta, k, 1, q)
    if k == 1:
        raise ScopeError(
            "W''(eta, 1, l) with eta, l > 1 is the complete bipartite graph "
            "K_{eta,l}; out of scope for this solver"
        )
    if q == 0:
        return min(eta * (k - 1) + l, eta * k)
    return eta * (k - 1) + l


def _validate_params(eta: int, k: int, l: int, q: int):
    _validate_q(q)
    if eta < 1 or k < 1 or l < 1:
        raise GraphValidationError("windmill parameters eta, k, l must be >= 1")
