"""Shared graph model: simple graphs, edge colorings, per-edge color lists.

Vertices are dense ids 0..n-1.  Undirected edges are stored as sorted pairs
(u, v) with u < v; directed edges keep their orientation.  The edge *index*
(position in the edge list) is the key used by colorings and constraints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph (no loops, no parallel edges)."""

    n: int
    edges: tuple[tuple[int, int], ...]
    directed: bool = False
    # adjacency[v] = tuple of (neighbor, edge_index); for directed graphs this
    # follows edge orientation (out-neighbors), with _in_adjacency the reverse.
    _adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )
    _in_adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        seen = set()
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        in_adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for idx, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {idx} endpoint out of range: {(u, v)}")
            if u == v:
                raise GraphError(f"edge {idx} is a self-loop at {u}")
            key = (u, v) if self.directed else (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {idx}: {(u, v)}")
            seen.add(key)
            if not self.directed and u > v:
                raise GraphError(f"undirected edge {idx} not normalized: {(u, v)}")
            adj[u].append((v, idx))
            if self.directed:
                in_adj[v].append((u, idx))
            else:
                adj[v].append((u, idx))
        for row in adj:
            row.sort()
        for row in in_adj:
            row.sort()
        object.__setattr__(self, "_adjacency", tuple(tuple(r) for r in adj))
        object.__setattr__(self, "_in_adjacency", tuple(tuple(r) for r in in_adj))

    # -- queries ---------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """(neighbor, edge_index) pairs; out-neighbors for directed graphs."""
        self._check_vertex(v)
        return self._adjacency[v]

    def in_neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        self._check_vertex(v)
        if not self.directed:
            return self._adjacency[v]
        return self._in_adjacency[v]

    def degree(self, v: int) -> int:
        """Incident edge count; in+out for directed graphs."""
        self._check_vertex(v)
        if self.directed:
            return len(self._adjacency[v]) + len(self._in_adjacency[v])
        return len(self._adjacency[v])

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adjacency[v])

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        if not self.directed:
            return len(self._adjacency[v])
        return len(self._in_adjacency[v])

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def edge_index(self, u: int, v: int) -> Optional[int]:
        for w, idx in self._adjacency[u]:
            if w == v:
                return idx
        return None

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range (n={self.n})")


def make_graph(n: int, edges: Iterable[tuple[int, int]], directed: bool = False) -> Graph:
    """Build a Graph, normalizing undirected edges to sorted pairs."""
    if directed:
        es = tuple((u, v) for u, v in edges)
    else:
        es = tuple((min(u, v), max(u, v)) for u, v in edges)
    return Graph(n=n, edges=es, directed=directed)


class GraphBuilder:
    """Mutable helper for constructing graphs vertex-by-vertex; freezes to Graph."""

    def __init__(self, directed: bool = False):
        self.directed = directed
        self.n = 0
        self.edges: list[tuple[int, int]] = []
        self._edge_set: set[tuple[int, int]] = set()

    def add_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def add_vertices(self, count: int) -> list[int]:
        ids = list(range(self.n, self.n + count))
        self.n += count
        return ids

    def add_edge(self, u: int, v: int) -> int:
        if u == v:
            raise GraphError(f"self-loop at {u}")
        key = (u, v) if self.directed else (min(u, v), max(u, v))
        if key in self._edge_set:
            raise GraphError(f"duplicate edge {(u, v)}")
        self._edge_set.add(key)
        self.edges.append(key)
        return len(self.edges) - 1

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if self.directed else (min(u, v), max(u, v))
        return key in self._edge_set

    def build(self) -> Graph:
        return Graph(n=self.n, edges=tuple(self.edges), directed=self.directed)


@dataclass(frozen=True)
class EdgeColoring:
    """Total or partial color assignment, aligned with the graph's edge list.

    assignment[i] is the color of edge i, or None while unassigned.  Color ids
    must be < palette_size when a palette size is declared.
    """

    assignment: tuple[Optional[int], ...]
    palette_size: Optional[int] = None

    def __post_init__(self) -> None:
        if self.palette_size is not None:
            for i, c in enumerate(self.assignment):
                if c is not None and not (0 <= c < self.palette_size):
                    raise GraphError(
                        f"edge {i} color {c} outside palette of size {self.palette_size}"
                    )

    @property
    def is_total(self) -> bool:
        return all(c is not None for c in self.assignment)

    def color_of(self, edge_index: int) -> Optional[int]:
        return self.assignment[edge_index]

    @staticmethod
    def total(colors: Sequence[int], palette_size: Optional[int] = None) -> "EdgeColoring":
        return EdgeColoring(tuple(int(c) for c in colors), palette_size)

    @staticmethod
    def from_dict(
        g: Graph, mapping: Mapping[int, int], palette_size: Optional[int] = None
    ) -> "EdgeColoring":
        colors: list[Optional[int]] = [None] * g.edge_count
        for k, v in mapping.items():
            colors[int(k)] = int(v)
        return EdgeColoring(tuple(colors), palette_size)


@dataclass(frozen=True)
class ColorConstraint:
    """Non-empty allowed color set for every edge of a graph."""

    allowed: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for i, s in enumerate(self.allowed):
            if not s:
                raise GraphError(f"edge {i} has an empty allowed-color set")

    @staticmethod
    def from_dict(g: Graph, mapping: Mapping[int, Iterable[int]]) -> "ColorConstraint":
        sets: list[frozenset[int]] = [frozenset()] * g.edge_count
        for k, v in mapping.items():
            sets[int(k)] = frozenset(int(c) for c in v)
        for i, s in enumerate(sets):
            if not s:
                raise GraphError(f"edge {i} missing from constraint mapping")
        return ColorConstraint(tuple(sets))

    @staticmethod
    def uniform(g: Graph, palette_size: int) -> "ColorConstraint":
        full = frozenset(range(palette_size))
        return ColorConstraint(tuple(full for _ in range(g.edge_count)))


# -- structural helpers ---------------------------------------------------


def is_saturated(g: Graph, v: int) -> bool:
    """True iff v has the maximum degree in g."""
    if g.n == 0:
        raise GraphError("empty graph")
    return g.degree(v) == g.max_degree()


def diamonds(g: Graph) -> list[tuple[int, int, int, int]]:
    """All 4-cycles, chordal or not, each once, as (a, b, c, d) in cyclic order.

    Canonical form: a is the cycle's smallest vertex, b < d among its two
    cycle-neighbors.  Sorted lexicographically.
    """
    if g.directed:
        raise GraphError("diamonds are defined for undirected graphs")
    out: list[tuple[int, int, int, int]] = []
    neigh = [set(w for w, _ in g.neighbors(v)) for v in range(g.n)]
    for a in range(g.n):
        for c in range(a + 1, g.n):
            common = sorted(w for w in neigh[a] & neigh[c] if w > a)
            for i in range(len(common)):
                for j in range(i + 1, len(common)):
                    b, d = common[i], common[j]
                    out.append((a, b, c, d))
    out.sort()
    return out


def add_plume(g: Graph, v: int, count: int) -> tuple[Graph, list[int]]:
    """Attach `count` new pendant vertices to v; returns (new graph, new edge ids)."""
    g._check_vertex(v)
    if count < 1:
        raise GraphError("plume count must be positive")
    edges = list(g.edges)
    new_ids = []
    for i in range(count):
        w = g.n + i
        edges.append((v, w) if g.directed else (min(v, w), max(v, w)))
        new_ids.append(len(edges) - 1)
    return Graph(n=g.n + count, edges=tuple(edges), directed=g.directed), new_ids


def bfs_distance(g: Graph, u: int, v: int) -> Optional[int]:
    """Shortest-path length from u to v (following orientation when directed);
    None if unreachable."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        return 0
    dist = {u: 0}
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            for y, _ in g.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if y == v:
                        return dist[y]
                    nxt.append(y)
        frontier = nxt
    return None


# -- serialization ---------------------------------------------------------


def graph_to_json(
    g: Graph,
    coloring: Optional[EdgeColoring] = None,
    constraints: Optional[ColorConstraint] = None,
) -> str:
    doc: dict = {
        "directed": g.directed,
        "n": g.n,
        "edges": [[u, v] for u, v in g.edges],
    }
    if coloring is not None:
        doc["coloring"] = {
            str(i): c for i, c in enumerate(coloring.assignment) if c is not None
        }
    if constraints is not None:
        doc["constraints"] = {
            str(i): sorted(s) for i, s in enumerate(constraints.allowed)
        }
    return json.dumps(doc, sort_keys=True)


def graph_from_json(
    text: str,
) -> tuple[Graph, Optional[EdgeColoring], Optional[ColorConstraint]]:
    doc = json.loads(text)
    g = make_graph(doc["n"], [tuple(e) for e in doc["edges"]], doc.get("directed", False))
    coloring = None
    if "coloring" in doc:
        coloring = EdgeColoring.from_dict(g, {int(k): v for k, v in doc["coloring"].items()})
    constraints = None
    if "constraints" in doc:
        constraints = ColorConstraint.from_dict(
            g, {int(k): v for k, v in doc["constraints"].items()}
        )
    return g, coloring, constraints


def export_dot(
    g: Graph,
    coloring: Optional[EdgeColoring] = None,
    vertex_tags: Optional[Sequence[str]] = None,
) -> str:
    """DOT text with color ids as edge labels; optional gadget clustering."""
    kind = "digraph" if g.directed else "graph"
    arrow = "->" if g.directed else "--"
    lines = [f"{kind} g {{"]
    if vertex_tags is not None:
        groups: dict[str, list[int]] = {}
        for v in range(g.n):
            groups.setdefault(vertex_tags[v], []).append(v)
        for ci, tag in enumerate(sorted(groups)):
            lines.append(f'  subgraph "cluster_{ci}" {{')
            lines.append(f'    label="{tag}";')
            for v in groups[tag]:
                lines.append(f"    {v};")
            lines.append("  }")
    else:
        for v in range(g.n):
            lines.append(f"  {v};")
    for i, (u, v) in enumerate(g.edges):
        if coloring is not None and coloring.assignment[i] is not None:
            lines.append(f'  {u} {arrow} {v} [label="{coloring.assignment[i]}"];')
        else:
            lines.append(f"  {u} {arrow} {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
