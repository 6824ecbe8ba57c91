"""Directed and undirected Yao / Theta graph construction.

Both families pick, for every node and every non-empty cone around it,
a single "closest" node in that cone: Euclidean distance for Yao, the
absolute projection distance onto the cone bisector for Theta. Ties are
broken deterministically by smallest node index. The reference
algorithm is the naive per-node cone scan; no sweep acceleration.
"""

from .geometry import bisector_projection, cone_of
from .model import THETA, YAO, GeometricGraph, NodeSet, distance

# For k < 3 a cone spans a half-plane or the whole plane, so projections
# onto the bisector stop being positive for all in-cone points and the
# Theta selection rule loses its usual geometric meaning. Graphs built
# there carry this warning.
_THETA_WIDE_CONE_WARNING = (
    "theta selection for k < 3 minimizes |bisector projection| over cones "
    "wider than a half-plane; interpret with care"
)


def build_directed_yao(nodes: NodeSet, k: int) -> GeometricGraph:
    """Directed Yao graph: each node points at its Euclidean-closest
    node within each of its k cones."""
    return _build_directed(nodes, k, YAO)


def build_directed_theta(nodes: NodeSet, k: int) -> GeometricGraph:
    """Directed Theta graph: as Yao, but "closest" means the smallest
    projection distance onto the cone's bisector."""
    return _build_directed(nodes, k, THETA)


def undirect(g: GeometricGraph) -> GeometricGraph:
    """Forget edge directions, collapsing mutual pairs to one edge."""
    if not g.directed:
        raise ValueError("graph is already undirected")
    edges = sorted({(min(a, b), max(a, b)) for a, b in g.edges})
    return GeometricGraph(
        family=g.family,
        k=g.k,
        directed=False,
        nodes=g.nodes,
        edges=tuple(edges),
        warning=g.warning,
    )


def build(nodes: NodeSet, family: str, k: int, directed: bool = False) -> GeometricGraph:
    """Build a graph of the given family; convenience dispatcher."""
    if family == YAO:
        g = build_directed_yao(nodes, k)
    elif family == THETA:
        g = build_directed_theta(nodes, k)
    else:
        raise ValueError(f"unknown family {family!r}")
    return g if directed else undirect(g)


def _build_directed(nodes: NodeSet, k: int, family: str) -> GeometricGraph:
    pts = nodes.points
    n = len(pts)
    edges = []
    theta = family == THETA
    for u in range(n):
        pu = pts[u]
        best: dict[int, tuple[float, int]] = {}
        for v in range(n):
            if v == u:
                continue
            pv = pts[v]
            i = cone_of(pu, pv, k)
            if theta:
                key = abs(bisector_projection(pu, pv, i, k))
            else:
                key = distance(pu, pv)
            cur = best.get(i)
            # strict < keeps the smallest node index on ties (v ascends)
            if cur is None or key < cur[0]:
                best[i] = (key, v)
        edges.extend((u, v) for _, v in best.values())
    warning = _THETA_WIDE_CONE_WARNING if theta and k < 3 else None
    return GeometricGraph(
        family=family,
        k=k,
        directed=True,
        nodes=nodes,
        edges=tuple(sorted(edges)),
        warning=warning,
    )
