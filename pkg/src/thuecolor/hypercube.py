"""Dimension-colored hypercubes, layer slices, and their structural checks.

Vertices of the k-cube are the integers 0..2^k-1; (x, y) is an edge iff x^y
is a power of two, and the edge's color is that bit index.  Distance is then
Hamming distance, which keeps all checks elementary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .graphs import EdgeColoring, Graph, GraphError, bfs_distance, diamonds, is_saturated

MAX_DIMENSION = 20  # construction cap: 2^20 vertices is already past desk scale


@dataclass(frozen=True)
class HypercubeColoring:
    k: int
    graph: Graph
    coloring: EdgeColoring


@dataclass(frozen=True)
class LayerSlice:
    """Induced subgraph on vertices within distance m of a base vertex,
    with the inherited dimension coloring.  labels[i] is the cube label of
    dense vertex i."""

    k: int
    m: int
    base: int
    graph: Graph
    coloring: EdgeColoring
    labels: tuple[int, ...]

    def dense_id(self, label: int) -> int:
        return self._label_to_id[label]

    @property
    def _label_to_id(self) -> dict[int, int]:
        return {lab: i for i, lab in enumerate(self.labels)}


def build_hypercube(k: int) -> HypercubeColoring:
    """Full k-cube with the unique-up-to-permutation dimension coloring."""
    if not (1 <= k <= MAX_DIMENSION):
        raise GraphError(f"dimension k={k} outside 1..{MAX_DIMENSION}")
    edges = []
    colors = []
    for x in range(1 << k):
        for i in range(k):
            if not (x >> i) & 1:
                edges.append((x, x | (1 << i)))
                colors.append(i)
    g = Graph(n=1 << k, edges=tuple(edges), directed=False)
    return HypercubeColoring(k, g, EdgeColoring.total(colors, palette_size=k))


def first_layers(k: int, m: int, base: int = 0) -> LayerSlice:
    """First m layers of the k-cube around `base` (distance <= m),
    dimension-colored."""
    if not (1 <= k <= MAX_DIMENSION):
        raise GraphError(f"dimension k={k} outside 1..{MAX_DIMENSION}")
    if not (0 <= m <= k):
        raise GraphError(f"layer bound m={m} outside 0..{k}")
    if not (0 <= base < (1 << k)):
        raise GraphError("base vertex outside the cube")
    labels = [x for x in range(1 << k) if bin(x ^ base).count("1") <= m]
    ids = {lab: i for i, lab in enumerate(labels)}
    edges = []
    colors = []
    for lab in labels:
        for i in range(k):
            other = lab ^ (1 << i)
            if other > lab and other in ids:
                edges.append((ids[lab], ids[other]))
                colors.append(i)
    g = Graph(n=len(labels), edges=tuple(edges), directed=False)
    return LayerSlice(k, m, base, g, EdgeColoring.total(colors, palette_size=k), tuple(labels))


@dataclass
class PropertyReport:
    """Outcome of the four structural checks on a dimension-colored cube."""

    k: int
    shortest_paths_distinct_colors: bool = True
    permutations_reach_same_endpoint: bool = True
    distinct_color_paths_are_shortest: bool = True
    layer_sizes_binomial: bool = True
    counterexamples: dict = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return (
            self.shortest_paths_distinct_colors
            and self.permutations_reach_same_endpoint
            and self.distinct_color_paths_are_shortest
            and self.layer_sizes_binomial
        )

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "shortest_paths_distinct_colors": self.shortest_paths_distinct_colors,
            "permutations_reach_same_endpoint": self.permutations_reach_same_endpoint,
            "distinct_color_paths_are_shortest": self.distinct_color_paths_are_shortest,
            "layer_sizes_binomial": self.layer_sizes_binomial,
            "all_passed": self.all_passed,
            "counterexamples": {k: repr(v) for k, v in self.counterexamples.items()},
        }


def _all_shortest_paths(g: Graph, u: int, v: int) -> list[list[int]]:
    """Every shortest u-v path, via backward DFS over the BFS distance field."""
    dist = {u: 0}
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            for y, _ in g.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    if v not in dist:
        return []
    paths: list[list[int]] = []

    def back(x: int, acc: list[int]) -> None:
        if x == u:
            paths.append([u] + acc)
            return
        for y, _ in g.neighbors(x):
            if dist.get(y) == dist[x] - 1:
                back(y, [x] + acc)

    back(v, [])
    return paths


def _distinct_color_walks(
    cube: HypercubeColoring, start: int
) -> list[tuple[list[int], list[int]]]:
    """All walks from `start` whose colors are distinct, following the unique
    same-colored edge at each vertex.  Returns (vertex path, color sequence)
    pairs for every non-empty walk."""
    g, colors = cube.graph, cube.coloring.assignment
    out: list[tuple[list[int], list[int]]] = []

    def extend(v: int, path: list[int], used: list[int]) -> None:
        by_color = {}
        for w, idx in g.neighbors(v):
            c = colors[idx]
            if c in by_color:
                raise GraphError("coloring is not a proper rainbow at a vertex")
            by_color[c] = w
        for c in sorted(by_color):
            if c in used:
                continue
            w = by_color[c]
            out.append((path + [w], used + [c]))
            extend(w, path + [w], used + [c])

    extend(start, [start], [])
    return out


def verify_hypercube_properties(
    k: int, sample_pairs: Optional[int] = None, seed: int = 0
) -> PropertyReport:
    """Check the four structural facts about the dimension coloring.

    Exhaustive over all vertex pairs for k <= 4; beyond that a deterministic
    sample of vertex pairs is used (default 40) and the report notes nothing
    about unsampled pairs.
    """
    import random

    cube = build_hypercube(k)
    g = cube.graph
    report = PropertyReport(k=k)

    # (4) layer sizes around vertex 0
    dist0 = [bfs_distance(g, 0, v) for v in range(g.n)]
    for i in range(k + 1):
        want = math.comb(k, i)
        got = sum(1 for d in dist0 if d == i)
        if got != want:
            report.layer_sizes_binomial = False
            report.counterexamples["layer_sizes"] = (i, got, want)
            break

    if k <= 4:
        pairs = [(u, v) for u in range(g.n) for v in range(g.n) if u != v]
    else:
        rng = random.Random(seed)
        count = sample_pairs if sample_pairs is not None else 40
        pairs = []
        while len(pairs) < count:
            u, v = rng.randrange(g.n), rng.randrange(g.n)
            if u != v:
                pairs.append((u, v))

    import itertools

    for u, v in pairs:
        shortest = _all_shortest_paths(g, u, v)
        base_colors: Optional[list[int]] = None
        for p in shortest:
            word = [cube.coloring.assignment[g.edge_index(a, b)] for a, b in zip(p, p[1:])]
            if len(set(word)) != len(word):
                report.shortest_paths_distinct_colors = False
                report.counterexamples.setdefault("shortest_not_distinct", (u, v, p, word))
            if base_colors is None:
                base_colors = word
        if base_colors is None:
            continue
        target_set = frozenset(base_colors)
        # (2) every permutation of a distinct-color path's colors reaches v,
        # and no other distinct-color sequence from u does; (3) each such
        # walk is a shortest path.
        if len(base_colors) <= 6:
            for perm in itertools.permutations(base_colors):
                x = u
                ok = True
                for c in perm:
                    nxt = None
                    for w, idx in g.neighbors(x):
                        if cube.coloring.assignment[idx] == c:
                            nxt = w
                            break
                    if nxt is None:
                        ok = False
                        break
                    x = nxt
                if not ok or x != v:
                    report.permutations_reach_same_endpoint = False
                    report.counterexamples.setdefault("permutation_misses", (u, v, perm))
        walks = _distinct_color_walks(cube, u)
        for path, word in walks:
            end = path[-1]
            if end == v and frozenset(word) != target_set:
                report.permutations_reach_same_endpoint = False
                report.counterexamples.setdefault("foreign_sequence", (u, v, word))
            if len(set(path)) != len(path) or len(word) != bfs_distance(g, u, end):
                report.distinct_color_paths_are_shortest = False
                report.counterexamples.setdefault("walk_not_shortest", (u, end, word))
    return report


def check_saturation_conclusion(g: Graph, coloring) -> list[dict]:
    """Diamonds with two saturated opposing vertices (whose incident edges do
    not meet outside the diamond) that use a number of colors other than two.

    On a nonrepetitive coloring with palette = max degree this list must be
    empty; on arbitrary colorings it reports which diamonds break the rule.
    """
    from .paths import color_list

    colors = color_list(g, coloring)
    out: list[dict] = []
    for a, b, c, d in diamonds(g):
        cyc = [(a, b), (b, c), (c, d), (d, a)]
        used = {colors[g.edge_index(u, v)] for u, v in cyc}
        inside = {a, b, c, d}
        for A, B in ((a, c), (b, d)):
            if not (is_saturated(g, A) and is_saturated(g, B)):
                continue
            shared_outside = [
                p for p, _ in g.neighbors(A)
                if p not in inside and any(q == p for q, _ in g.neighbors(B))
            ]
            if shared_outside:
                continue
            if len(used) != 2:
                out.append(
                    {
                        "diamond": (a, b, c, d),
                        "saturated_pair": (A, B),
                        "colors": sorted(used),
                    }
                )
                break
    return out
