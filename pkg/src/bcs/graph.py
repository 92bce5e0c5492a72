"""Bicolored graph core: representation, connectivity, and solution validation.

Vertices are dense integers 0..n-1.  Graphs are immutable after construction,
so they can be shared freely across threads or worker processes; every
operation here is read-only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

RED = "red"
BLUE = "blue"
COLORS = (RED, BLUE)


class BicoloredGraph:
    """Undirected simple graph whose vertices are colored red or blue."""

    __slots__ = ("n", "colors", "adj", "edges", "red_total", "blue_total")

    def __init__(self, colors: Sequence[str], edges: Iterable[tuple[int, int]] = ()):
        colors = tuple(colors)
        for c in colors:
            if c not in COLORS:
                raise ValueError(f"unknown color {c!r}")
        n = len(colors)
        adj = [set() for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            seen.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.colors = colors
        self.adj = tuple(frozenset(s) for s in adj)
        self.edges = tuple(sorted(seen))
        self.red_total = sum(1 for c in colors if c == RED)
        self.blue_total = n - self.red_total

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __repr__(self):
        return f"BicoloredGraph(n={self.n}, m={len(self.edges)})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "colors": list(self.colors),
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BicoloredGraph":
        """Parse the interchange format; rejects duplicate and self edges."""
        if not isinstance(obj, dict):
            raise ValueError("graph JSON must be an object")
        try:
            n = obj["n"]
            colors = obj["colors"]
            edges = obj["edges"]
        except KeyError as exc:
            raise ValueError(f"graph JSON missing field {exc}") from None
        if not isinstance(n, int) or n < 0:
            raise ValueError("n must be a non-negative integer")
        if len(colors) != n:
            raise ValueError("colors length must equal n")
        seen = set()
        pairs = []
        for e in edges:
            if len(e) != 2:
                raise ValueError(f"malformed edge {e!r}")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            pairs.append((u, v))
        return cls(colors, pairs)


def induced_subgraph(g: BicoloredGraph, s: Sequence[int]) -> tuple[BicoloredGraph, list[int]]:
    """Induced subgraph on vertex set ``s``.

    Returns the new graph together with the list mapping new ids back to the
    original ids (new id i corresponds to original ``mapping[i]``).
    """
    ids = list(dict.fromkeys(s))
    for v in ids:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(ids)}
    colors = [g.colors[v] for v in ids]
    edges = []
    for i, v in enumerate(ids):
        for w in g.adj[v]:
            j = index.get(w)
            if j is not None and i < j:
                edges.append((i, j))
    return BicoloredGraph(colors, edges), ids


def connected_components(g: BicoloredGraph, s: Sequence[int] | None = None) -> list[list[int]]:
    """Connected components of the subgraph induced by ``s`` (or all of g)."""
    verts = range(g.n) if s is None else s
    members = set(verts)
    comps = []
    seen = set()
    for v in verts:
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            x = stack.pop()
            for w in g.adj[x]:
                if w in members and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: BicoloredGraph, s: Sequence[int]) -> bool:
    """True iff ``s`` is nonempty and induces a single connected component."""
    members = set(s)
    if not members:
        return False
    for v in members:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for w in g.adj[x]:
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)


def is_balanced(g: BicoloredGraph, s: Sequence[int]) -> bool:
    """True iff ``s`` holds equally many red and blue vertices (empty counts)."""
    red = blue = 0
    for v in s:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
        if g.colors[v] == RED:
            red += 1
        else:
            blue += 1
    return red == blue


@dataclass(frozen=True)
class Solution:
    """A vertex set claimed to be balanced and connected, with provenance."""

    vertices: tuple[int, ...]
    red_count: int
    blue_count: int
    algorithm_tag: str

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "red_count": self.red_count,
            "blue_count": self.blue_count,
            "algorithm": self.algorithm_tag,
            "size": self.size,
        }


def empty_solution(tag: str) -> Solution:
    return Solution((), 0, 0, tag)


def make_solution(g: BicoloredGraph, vertices: Iterable[int], tag: str) -> Solution:
    verts = tuple(sorted(set(vertices)))
    red = sum(1 for v in verts if g.colors[v] == RED)
    return Solution(verts, red, len(verts) - red, tag)


def validate_solution(g: BicoloredGraph, sol: Solution) -> bool:
    """Check a Solution against the graph it claims to solve.

    The empty solution is always valid.  A nonempty one must induce a single
    connected component, have equal color counts, and carry counts consistent
    with the graph coloring.
    """
    verts = sol.vertices
    if len(set(verts)) != len(verts):
        return False
    for v in verts:
        if not (0 <= v < g.n):
            return False
    if not verts:
        return sol.red_count == 0 and sol.blue_count == 0
    red = sum(1 for v in verts if g.colors[v] == RED)
    blue = len(verts) - red
    if (red, blue) != (sol.red_count, sol.blue_count):
        return False
    if red != blue:
        return False
    return is_connected(g, verts)
