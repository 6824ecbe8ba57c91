"""Counter-example node sets for k <= 5, plus randomized search for
fresh ones.

The shipped entries V0 (k = 1..3), V1 (k = 4), and V2 (k = 5) each make
both the Yao and the Theta graph fail void-freeness at the ordered pair
(u, v). Their coordinates are not canonical: they were found by seeded
search (tools/find_corpus_coordinates.py) against the validators in
this module and in voidcheck, and the test suite re-validates them on
every run, so the checkers stay the ground truth.
"""

import importlib.resources
import random
from dataclasses import dataclass

from .construct import build, undirect, build_directed_theta, build_directed_yao
from .geometry import TAU, Point, clockwise_angle_from_north, cone_of
from .model import THETA, YAO, FAMILIES, NodeSet, distance, graphs_equal, node_set_from_json
from .voidcheck import check_void_free, has_void

# Angular slack for V2's near-boundary placement: v sits inside c(u,1)
# within this many radians of the cone's trailing ray.
V2_RAY_TOL = 1e-6

_ENTRY_TABLE = (
    # name, data file, applicable k, witness pair, nodes required outside C_v
    ("V0", "v0.json", (1, 2, 3), ("u", "v"), ("a",)),
    ("V1", "v1.json", (4,), ("u", "v"), ("a", "b")),
    ("V2", "v2.json", (5,), ("u", "v"), ("a", "b", "c")),
)


@dataclass(frozen=True)
class CorpusEntry:
    """A named counter-example node set.

    outside_circle lists the node ids that must lie strictly outside the
    circle centered at the witness target v with radius d(u, v); those
    are the nodes whose edges to u would otherwise rescue greedy
    forwarding.
    """

    name: str
    nodes: NodeSet
    applicable_k: tuple[int, ...]
    expected_witness: tuple[str, str]
    outside_circle: tuple[str, ...]


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a counterexample search: the first sampled node set
    whose graph has a void, or None when the trial budget ran out."""

    nodes: NodeSet | None
    trials: int

    @property
    def found(self) -> bool:
        return self.nodes is not None


def load_corpus() -> list[CorpusEntry]:
    """The three shipped counter-example entries, smallest k first."""
    entries = []
    data_dir = importlib.resources.files("conegraph.data")
    for name, fname, ks, witness, outside in _ENTRY_TABLE:
        nodes = node_set_from_json(data_dir.joinpath(fname).read_text())
        entries.append(CorpusEntry(name, nodes, ks, witness, outside))
    return entries


def validate_entry(entry: CorpusEntry) -> list[str]:
    """Re-derive everything an entry claims; empty list when it holds.

    For every applicable k: the Yao and Theta graphs coincide, both
    exhibit the expected (u, v) witness, and every listed node lies
    strictly outside the circle C_v around v through u.
    """
    violations = []
    nodes = entry.nodes
    u_id, v_id = entry.expected_witness
    u = nodes.index_of(u_id)
    v = nodes.index_of(v_id)
    radius = distance(nodes.points[u], nodes.points[v])
    for label in entry.outside_circle:
        if not distance(nodes.point_of(label), nodes.points[v]) > radius:
            violations.append(f"{label} inside C_v")
    for k in entry.applicable_k:
        yao = undirect(build_directed_yao(nodes, k))
        theta = undirect(build_directed_theta(nodes, k))
        if not graphs_equal(yao, theta):
            violations.append(f"yao and theta graphs differ at k={k}")
        for family, g in ((YAO, yao), (THETA, theta)):
            pairs = {(w.u, w.v) for w in check_void_free(g).witnesses}
            if (u, v) not in pairs:
                violations.append(f"{family} graph at k={k} lacks the ({u_id},{v_id}) witness")
    return violations


def validate_v2_constraints(entry: CorpusEntry) -> list[str]:
    """Audit the V2 placement constraints; empty list when all hold.

    At k = 5: v sits inside c(u,1) hugging its trailing ray; d inside
    c(v,4); b inside c(u,3), c(d,4) and c(v,4); c inside c(u,2), c(d,3)
    and c(v,3); and a, b, c all lie strictly outside the circle C_v.
    """
    if entry.name != "V2":
        raise ValueError(f"expected the V2 entry, got {entry.name!r}")
    k = 5
    nodes = entry.nodes
    p = {label: nodes.point_of(label) for label in ("u", "v", "a", "b", "c", "d")}
    violations = []

    def check_cone(label: str, center: str, i: int) -> None:
        if cone_of(p[center], p[label], k) != i:
            violations.append(f"{label} not in c({center},{i})")

    check_cone("v", "u", 1)
    angle = clockwise_angle_from_north(p["u"], p["v"])
    if not TAU / k - V2_RAY_TOL <= angle <= TAU / k:
        violations.append(f"v not within {V2_RAY_TOL} rad of the trailing ray of c(u,1)")
    check_cone("d", "v", 4)
    check_cone("b", "u", 3)
    check_cone("b", "d", 4)
    check_cone("b", "v", 4)
    check_cone("c", "u", 2)
    check_cone("c", "d", 3)
    check_cone("c", "v", 3)
    radius = distance(p["u"], p["v"])
    for label in ("a", "b", "c"):
        if not distance(p[label], p["v"]) > radius:
            violations.append(f"{label} inside C_v")
    return violations


def random_nodeset(n: int, seed: int) -> NodeSet:
    """n distinct points uniform in the unit square, deterministic per
    seed; ids are p0..p{n-1}."""
    if n < 1:
        raise ValueError(f"need at least one node, got {n}")
    rng = random.Random(seed)
    return NodeSet(zip((f"p{i}" for i in range(n)), _sample_points(rng, n)))


def search_counterexample(
    family: str,
    k: int,
    n_nodes: int | None = None,
    seed: int = 0,
    budget: int = 1_000_000,
) -> SearchResult:
    """Sample node sets uniformly in the unit square until one whose
    family-k graph has a void turns up, or the budget runs out.

    With n_nodes=None each trial draws its size from 4..8. Deterministic
    given (family, k, n_nodes, seed, budget). Rejects k outside 1..5,
    where no counterexample exists.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if not 1 <= k <= 5:
        raise ValueError("k outside 1..5: theorem guarantees no counterexample")
    if n_nodes is not None and n_nodes < 2:
        raise ValueError(f"need at least two nodes, got {n_nodes}")
    rng = random.Random(seed)
    for trial in range(1, budget + 1):
        n = n_nodes if n_nodes is not None else rng.randint(4, 8)
        nodes = NodeSet(zip((f"p{i}" for i in range(n)), _sample_points(rng, n)))
        if has_void(build(nodes, family, k)):
            report = check_void_free(build(nodes, family, k))  # sound by construction
            assert not report.void_free
            return SearchResult(nodes=nodes, trials=trial)
    return SearchResult(nodes=None, trials=budget)


def _sample_points(rng: random.Random, n: int) -> list[Point]:
    points: list[Point] = []
    seen: set[tuple[float, float]] = set()
    while len(points) < n:
        xy = (rng.random(), rng.random())
        if xy in seen:  # exact duplicate draw: regenerate
            continue
        seen.add(xy)
        points.append(Point(*xy))
    return points
