"""Greedy forwarding over undirected geometric graphs.

Each hop goes to the neighbor closest to the target; a packet is stuck
(a void) when no neighbor is strictly closer to the target than the
current node. Distances to the target strictly decrease along any
delivered path, so routes terminate in fewer than |V| steps.
"""

import math

from .model import GeometricGraph, RouteResult


def greedy_step(g: GeometricGraph, u: int, t: int) -> int | None:
    """Next hop from u toward t, or None when u has no neighbor strictly
    closer to t (the void signal).

    Neighbor ties on distance-to-target break by smallest node index.
    Raises ValueError when u == t (already delivered) or on a directed
    graph.
    """
    g._check_node(t)
    if u == t:
        raise ValueError("already delivered: node is the target")
    best = _best_neighbor(g, u, t)
    if best is None or best[0] >= g.dist(u, t):
        return None
    return best[1]


def greedy_route(g: GeometricGraph, s: int, t: int) -> RouteResult:
    """Forward greedily from s until t is reached or a void is hit."""
    g._check_node(s)
    g._check_node(t)
    if s == t:
        return RouteResult(delivered=True, path=(s,))
    path = [s]
    u = s
    while u != t:
        nxt = greedy_step(g, u, t)
        if nxt is None:
            best = _best_neighbor(g, u, t)
            return RouteResult(
                delivered=False,
                path=tuple(path),
                stuck=u,
                best_neighbor_distance=best[0] if best else math.inf,
            )
        path.append(nxt)
        u = nxt
        if len(path) > len(g.nodes):  # unreachable: distance to t strictly decreases
            raise RuntimeError("greedy route revisited a node")
    return RouteResult(delivered=True, path=tuple(path))


def _best_neighbor(g: GeometricGraph, u: int, t: int) -> tuple[float, int] | None:
    row = g._dist_rows[t]
    best = None
    for w in g.neighbors(u):
        dw = row[w]
        if best is None or dw < best[0]:
            best = (dw, w)
    return best
