"""Square-path detection on edge-colored graphs.

A square path is an open simple path whose color word is xx (x non-empty);
two same-colored edges sharing a vertex are the h=1 case.  Closed cycles are
exempt.  Any path whose word merely *contains* a square has a subpath that is
exactly a square, so searching for exact squares is a complete decision
procedure.

The search walks color-matched vertex pairs in lockstep: a square
p_0..p_{2h} is reconstructed as two walks from (p_0, p_h) that traverse
equal-colored edges step for step, closing when the first walk reaches p_h.
Each step is constrained immediately, so the search never pays for the
combinatorial explosion of unconstrained path prefixes.  Worst-case cost is
still exponential (the decision problem is coNP-hard), but on reduction
outputs the color matching kills almost every branch at depth one.

Search order (documented for determinism): start pairs (p_0, p_h) in
lexicographic order, then colors ascending, then successor vertices
ascending; the first square found is returned.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from .graphs import EdgeColoring, Graph, GraphError

ColoringLike = Union[EdgeColoring, Sequence[int]]


@dataclass(frozen=True)
class SquareWitness:
    """An open simple path whose edge-color word is exactly a square."""

    vertices: tuple[int, ...]
    colors: tuple[int, ...]
    half_len: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": list(self.vertices),
                "colors": list(self.colors),
                "half_len": self.half_len,
            },
            sort_keys=True,
        )

    @staticmethod
    def from_json(text: str) -> "SquareWitness":
        doc = json.loads(text)
        return SquareWitness(
            tuple(doc["vertices"]), tuple(doc["colors"]), doc["half_len"]
        )


def color_list(g: Graph, coloring: ColoringLike) -> list[int]:
    """Normalize a coloring argument to a dense per-edge color list."""
    if isinstance(coloring, EdgeColoring):
        if len(coloring.assignment) != g.edge_count:
            raise GraphError("coloring length does not match edge count")
        if not coloring.is_total:
            raise GraphError("coloring is partial")
        return [c for c in coloring.assignment]  # type: ignore[misc]
    colors = [int(c) for c in coloring]
    if len(colors) != g.edge_count:
        raise GraphError("coloring length does not match edge count")
    return colors


def find_square_path(
    g: Graph, coloring: ColoringLike, max_half_len: Optional[int] = None
) -> Optional[SquareWitness]:
    """First square open path with half length <= max_half_len (unbounded when
    None), or None; deterministic for fixed input."""
    colors = color_list(g, coloring)
    h_max = (g.n - 1) // 2
    if max_half_len is not None:
        if max_half_len < 1:
            raise GraphError("max_half_len must be >= 1")
        h_max = min(h_max, max_half_len)
    if h_max < 1 or g.edge_count < 2:
        return None

    # out[v] = [(color, successor, edge_index)] sorted; forward steps only.
    out: list[list[tuple[int, int, int]]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        for w, idx in g.neighbors(v):
            out[v].append((colors[idx], w, idx))
        out[v].sort()

    # Start pairs must share at least one incident (out-)color.
    by_color: dict[int, list[int]] = {}
    for v in range(g.n):
        for c, _, _ in out[v]:
            lst = by_color.setdefault(c, [])
            if not lst or lst[-1] != v:
                lst.append(v)
    pairs = set()
    for vs in by_color.values():
        for a in vs:
            for b in vs:
                if a != b:
                    pairs.add((a, b))

    visited = [False] * g.n

    def search(a: int, b: int, b0: int, path1: list[int], path2: list[int],
               word: list[int]) -> Optional[SquareWitness]:
        can_extend = len(word) < h_max - 1
        i = j = 0
        ea, eb = out[a], out[b]
        while i < len(ea) and j < len(eb):
            ca, cb = ea[i][0], eb[j][0]
            if ca < cb:
                i += 1
                continue
            if cb < ca:
                j += 1
                continue
            c = ca
            i2 = i
            while i2 < len(ea) and ea[i2][0] == c:
                x = ea[i2][1]
                j2 = j
                while j2 < len(eb) and eb[j2][0] == c:
                    y = eb[j2][1]
                    if x == b0 and not visited[y]:
                        # Walk 1 reached the midpoint: path1+[a] is p_0..p_{h-1},
                        # path2 is p_h..p_{2h-2}, b and y close the second half.
                        h = len(path1) + 1
                        verts = tuple(path1) + (a,) + tuple(path2) + (b, y)
                        return SquareWitness(verts, tuple(word + [c]) * 2, h)
                    if can_extend and not visited[x] and not visited[y] and x != y:
                        visited[x] = visited[y] = True
                        path1.append(a)
                        path2.append(b)
                        word.append(c)
                        found = search(x, y, b0, path1, path2, word)
                        word.pop()
                        path2.pop()
                        path1.pop()
                        visited[x] = visited[y] = False
                        if found is not None:
                            return found
                    j2 += 1
                i2 += 1
            i, j = i2, j2
        return None

    for a0, b0 in sorted(pairs):
        visited[a0] = visited[b0] = True
        found = search(a0, b0, b0, [], [], [])
        visited[a0] = visited[b0] = False
        if found is not None:
            return found
    return None


def is_nonrepetitive(
    g: Graph, coloring: ColoringLike, max_half_len: Optional[int] = None
) -> tuple[bool, Optional[SquareWitness]]:
    """True iff no square open path exists under the given bound."""
    w = find_square_path(g, coloring, max_half_len)
    return (w is None), w


def enumerate_open_paths(
    g: Graph, max_len: Optional[int] = None
) -> Iterator[list[int]]:
    """Every simple open path as a vertex list; each undirected path once
    (smaller endpoint first), each directed path once per orientation.
    max_len bounds the edge count."""
    limit = g.n - 1 if max_len is None else min(max_len, g.n - 1)
    if limit < 1:
        return
    on_path = [False] * g.n
    path: list[int] = []

    def extend(v: int) -> Iterator[list[int]]:
        on_path[v] = True
        path.append(v)
        if len(path) >= 2 and (g.directed or path[0] < path[-1]):
            yield list(path)
        if len(path) <= limit:
            for w, _ in g.neighbors(v):
                if not on_path[w]:
                    yield from extend(w)
        path.pop()
        on_path[v] = False

    for s in range(g.n):
        yield from extend(s)


def path_color_word(g: Graph, coloring: ColoringLike, path: Sequence[int]) -> list[int]:
    """Edge colors along consecutive vertices of a path."""
    colors = color_list(g, coloring)
    word = []
    for u, v in zip(path, path[1:]):
        idx = g.edge_index(u, v)
        if idx is None:
            raise GraphError(f"no edge {(u, v)} along the given path")
        word.append(colors[idx])
    return word


def validate_witness(g: Graph, coloring: ColoringLike, w: SquareWitness) -> bool:
    """Revalidate a witness against its graph and coloring from scratch."""
    if w.half_len < 1 or len(w.vertices) != 2 * w.half_len + 1:
        return False
    if len(set(w.vertices)) != len(w.vertices):
        return False
    try:
        word = path_color_word(g, coloring, w.vertices)
    except GraphError:
        return False
    if tuple(word) != w.colors:
        return False
    return word[: w.half_len] == word[w.half_len :]
