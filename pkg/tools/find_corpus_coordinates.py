#!/usr/bin/env python3
"""Derive coordinates for the shipped counter-example node sets.

The library's validators are the oracle: a candidate layout counts only
if the Yao and Theta graphs coincide, both exhibit the (u, v) witness,
and the per-entry placement constraints hold. Raw hits are rounded to a
3-decimal grid and re-validated, then re-validated again under random
jitter, so the committed fixtures sit well inside their feasibility
region (every strict inequality has slack far above 1e-6).

Usage: python tools/find_corpus_coordinates.py [--entry V0|V1|V2] [--out DIR]
"""

import argparse
import math
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from conegraph.construct import build_directed_theta, build_directed_yao, undirect
from conegraph.corpus import V2_RAY_TOL, CorpusEntry, validate_v2_constraints
from conegraph.geometry import TAU, Point
from conegraph.model import NodeSet, distance, graphs_equal

MARGIN = 0.05  # absolute slack required on witness / circle inequalities


def direction(deg: float) -> tuple[float, float]:
    rad = math.radians(deg)
    return (math.sin(rad), math.cos(rad))


def polar(dist: float, deg: float) -> Point:
    dx, dy = direction(deg)
    return Point(dist * dx, dist * dy)


def offset(p: Point, dist: float, deg: float) -> Point:
    dx, dy = direction(deg)
    return Point(p.x + dist * dx, p.y + dist * dy)


def witness_margin(graph, u: int, v: int) -> float:
    """min over u's neighbors of d(., v) minus d(u, v); >= 0 iff (u, v)
    is a void pair."""
    duv = graph.dist(u, v)
    best = min((graph.dist(w, v) for w in graph.neighbors(u)), default=math.inf)
    return best - duv


# ---------------------------------------------------------------------------
# V0: four nodes, k = 1, 2, 3


def v0_ok(ns: NodeSet) -> bool:
    u, v, a, b = 0, 1, 2, 3
    yao = {}
    for k in (1, 2, 3):
        yao[k] = undirect(build_directed_yao(ns, k))
    if set(yao[1].edges) != {(u, a), (v, b)}:
        return False
    if yao[2].edges != yao[3].edges:
        return False
    r = distance(ns.points[u], ns.points[v])
    if not distance(ns.points[a], ns.points[v]) > r + MARGIN:
        return False
    for k in (1, 2, 3):
        theta = undirect(build_directed_theta(ns, k))
        if not graphs_equal(yao[k], theta):
            return False
        if witness_margin(yao[k], u, v) < MARGIN:
            return False
    return True


def sample_v0(rng: random.Random) -> NodeSet:
    # v, a, b share u's first cone for k = 2 and 3: v hugs the far side,
    # a the near side (for the circle exclusion), b floats W-to-N of v
    # inside C_v so it can shield v from u
    phi = rng.uniform(96.0, 119.0)
    v = polar(10.0, phi)
    alpha = rng.uniform(max(1.0, phi - 119.0), phi - 84.0)
    a = polar(rng.uniform(0.5, 2.2), alpha)
    b = offset(v, rng.uniform(1.0, 6.0), rng.uniform(255.0, 358.0))
    return NodeSet([("u", Point(0.0, 0.0)), ("v", v), ("a", a), ("b", b)])


# ---------------------------------------------------------------------------
# V1: six nodes, k = 4


def v1_ok(ns: NodeSet) -> bool:
    u, v, a, b = 0, 1, 2, 3
    yao = undirect(build_directed_yao(ns, 4))
    if set(yao.neighbors(u)) != {a, b}:
        return False
    r = distance(ns.points[u], ns.points[v])
    for x in (a, b):
        if not distance(ns.points[x], ns.points[v]) > r + MARGIN:
            return False
    if witness_margin(yao, u, v) < MARGIN:
        return False
    theta = undirect(build_directed_theta(ns, 4))
    if not graphs_equal(yao, theta):
        return False
    if witness_margin(theta, u, v) < MARGIN:
        return False
    return True


def sample_v1(rng: random.Random) -> NodeSet:
    # v hugs a cone boundary of u (just inside), one of u's picks shares
    # that cone near its far side, the other sits wherever; c and d hang
    # around v to shield it
    phi = rng.choice((0.0, 90.0, 180.0, 270.0)) + rng.uniform(0.3, 14.0)
    v = polar(10.0, phi)
    a = polar(rng.uniform(6.0, 9.8), phi + rng.uniform(70.0, 89.0))
    b = polar(rng.uniform(2.0, 9.8), rng.uniform(0.0, 360.0))
    c = offset(v, rng.uniform(1.0, 9.5), rng.uniform(0.0, 360.0))
    d = offset(v, rng.uniform(1.0, 9.5), rng.uniform(0.0, 360.0))
    return NodeSet([
        ("u", Point(0.0, 0.0)), ("v", v), ("a", a), ("b", b), ("c", c), ("d", d),
    ])


# ---------------------------------------------------------------------------
# V2: six nodes, k = 5


def make_v2_entry(ns: NodeSet) -> CorpusEntry:
    return CorpusEntry(
        name="V2",
        nodes=ns,
        applicable_k=(5,),
        expected_witness=("u", "v"),
        outside_circle=("a", "b", "c"),
    )


def v2_ok(ns: NodeSet) -> bool:
    u, v = 0, 1
    if validate_v2_constraints(make_v2_entry(ns)):
        return False
    r = distance(ns.points[u], ns.points[v])
    for label in ("a", "b", "c"):
        if not distance(ns.point_of(label), ns.points[v]) > r + MARGIN:
            return False
    yao = undirect(build_directed_yao(ns, 5))
    if witness_margin(yao, u, v) < MARGIN:
        return False
    theta = undirect(build_directed_theta(ns, 5))
    if not graphs_equal(yao, theta):
        return False
    if witness_margin(theta, u, v) < MARGIN:
        return False
    return True


def sample_v2(rng: random.Random) -> NodeSet:
    # v pinned just inside c(u,1), hugging the trailing ray. a and c hug
    # the far sides of c(u,1) and c(u,2): only there can a node beat v
    # (resp. d) for u's pick while staying outside C_v. d shields v from
    # u's side, and b sits beyond d, closer to d than u is, so d never
    # links to u.
    v = polar(10.0, math.degrees(TAU / 5 - V2_RAY_TOL / 2))
    bearing_a = rng.uniform(2.0, 10.0)
    min_a = 20.0 * math.cos(math.radians(72.0 - bearing_a))
    a = polar(rng.uniform(min_a + 0.4, 9.6), bearing_a)
    bearing_c = rng.uniform(118.0, 143.5)
    min_c = 20.0 * math.cos(math.radians(bearing_c - 72.0))
    dist_c = rng.uniform(min_c + 0.3, 9.8)
    c = polar(dist_c, bearing_c)
    d = offset(v, rng.uniform(2.2, 4.5), rng.uniform(217.0, 250.0))
    dist_d = math.sqrt(d.x * d.x + d.y * d.y)
    if dist_d < dist_c + 0.15:
        raise ValueError("d would displace c as u's pick")
    b = offset(d, rng.uniform(4.0, dist_d - 0.15), rng.uniform(230.0, 286.0))
    return NodeSet([
        ("u", Point(0.0, 0.0)), ("v", v), ("a", a), ("b", b), ("c", c), ("d", d),
    ])


# ---------------------------------------------------------------------------
# driver


ENTRIES = {
    "V0": (sample_v0, v0_ok),
    "V1": (sample_v1, v1_ok),
    "V2": (sample_v2, v2_ok),
}

# nodes whose placement must survive untouched: V2's v hugs u's cone
# boundary to within 1e-6 rad, which only means anything while u stays put
KEEP_EXACT = {"V2": ("u", "v")}


def round_nodes(ns: NodeSet, keep: tuple[str, ...]) -> NodeSet:
    rounded = []
    for node_id, p in ns.nodes:
        if node_id in keep:
            rounded.append((node_id, p))
        else:
            rounded.append((node_id, Point(round(p.x, 3), round(p.y, 3))))
    return NodeSet(rounded)


def jitter_nodes(ns: NodeSet, rng: random.Random, amp: float, keep: tuple[str, ...]) -> NodeSet:
    out = []
    for node_id, p in ns.nodes:
        if node_id in keep:
            out.append((node_id, p))
        else:
            out.append((node_id, Point(p.x + rng.uniform(-amp, amp),
                                       p.y + rng.uniform(-amp, amp))))
    return NodeSet(out)


def find(entry: str, seed: int, budget: int) -> NodeSet | None:
    sampler, ok = ENTRIES[entry]
    keep = KEEP_EXACT.get(entry, ())
    rng = random.Random(seed)
    jrng = random.Random(seed + 1)
    for trial in range(1, budget + 1):
        try:
            ns = sampler(rng)
        except ValueError:
            continue
        try:
            if not ok(ns):
                continue
        except ValueError:
            continue
        rounded = round_nodes(ns, keep)
        try:
            if not ok(rounded):
                continue
            if not all(ok(jitter_nodes(rounded, jrng, 2e-3, keep)) for _ in range(40)):
                continue
        except ValueError:
            continue
        print(f"{entry}: hit at trial {trial}")
        return rounded
    return None


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--entry", choices=sorted(ENTRIES), default=None)
    parser.add_argument("--seed", type=int, default=20240901)
    parser.add_argument("--budget", type=int, default=2_000_000)
    parser.add_argument("--out", default=str(Path(__file__).resolve().parent.parent
                                             / "src" / "conegraph" / "data"))
    args = parser.parse_args()
    names = [args.entry] if args.entry else sorted(ENTRIES)
    out_dir = Path(args.out)
    failed = []
    for name in names:
        found = find(name, args.seed, args.budget)
        if found is None:
            print(f"{name}: no hit within budget", file=sys.stderr)
            failed.append(name)
            continue
        from conegraph.model import node_set_to_json

        path = out_dir / f"{name.lower()}.json"
        path.write_text(node_set_to_json(found))
        print(f"{name}: wrote {path}")
        for node_id, p in found.nodes:
            print(f"  {node_id}: ({p.x}, {p.y})")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
