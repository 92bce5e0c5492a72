"""Exact brute-force reference solvers.

These are the ground truth the polynomial solvers, the FPT algorithm, and the
reduction generators are checked against.  They are exhaustive by design and
guarded by explicit size budgets.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import RED, BicoloredGraph, Solution, empty_solution, make_solution


class CapacityError(RuntimeError):
    """An oracle was asked for more than its budget allows."""


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 18
    max_terminals: int = 8

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_terminals <= 0:
            raise ValueError("budget caps must be positive")


DEFAULT_BUDGET = OracleBudget()


def connected_subsets(g: BicoloredGraph, max_size: int | None = None) -> Iterator[frozenset]:
    """Enumerate every connected induced vertex subset exactly once.

    Canonical extension: each subset is anchored at its minimum vertex and
    grown only by larger-id neighbors; once a candidate has been branched on
    it is banned for the remaining branches of the same level, so no subset
    appears twice.
    """
    n = g.n
    cap = n if max_size is None else min(max_size, n)
    if cap <= 0:
        return
    adj = g.adj

    def extend(subset, cand, banned, anchor):
        my_banned = set(banned)
        for v in sorted(cand):
            if v in my_banned:
                continue
            new = subset | {v}
            yield new
            if len(new) < cap:
                child = set(cand)
                child.discard(v)
                for w in adj[v]:
                    if w > anchor and w not in new:
                        child.add(w)
                child -= my_banned
                yield from extend(new, child, my_banned, anchor)
            my_banned.add(v)

    for anchor in range(n):
        start = frozenset([anchor])
        yield start
        if cap > 1:
            cand = {w for w in adj[anchor] if w > anchor}
            yield from extend(start, cand, set(), anchor)


def bcs_oracle(g: BicoloredGraph, budget: OracleBudget | None = None) -> Solution:
    """Maximum balanced connected subgraph by exhaustive enumeration."""
    budget = budget or DEFAULT_BUDGET
    if g.n > budget.max_vertices:
        raise CapacityError(f"n={g.n} exceeds oracle cap {budget.max_vertices}")
    best: frozenset | None = None
    best_size = 0
    limit = 2 * min(g.red_total, g.blue_total)
    if limit == 0:
        return empty_solution("oracle")
    for subset in connected_subsets(g):
        size = len(subset)
        if size <= best_size or size % 2:
            continue
        red = sum(1 for v in subset if g.colors[v] == RED)
        if 2 * red == size:
            best, best_size = subset, size
            if best_size == limit:
                break
    if best is None:
        return empty_solution("oracle")
    return make_solution(g, best, "oracle")


def k_bcs_oracle(g: BicoloredGraph, k: int, budget: OracleBudget | None = None) -> bool:
    """Exact decision: does a balanced connected subgraph of size k exist?

    The enumeration is capped at subsets of size k, which keeps the search
    tractable even on graphs whose total connected-subset count is huge.
    """
    budget = budget or DEFAULT_BUDGET
    if g.n > budget.max_vertices:
        raise CapacityError(f"n={g.n} exceeds oracle cap {budget.max_vertices}")
    if k == 0:
        return True
    if k % 2 or k < 0 or k > g.n:
        return False
    if k // 2 > min(g.red_total, g.blue_total):
        return False
    for subset in connected_subsets(g, max_size=k):
        if len(subset) == k:
            red = sum(1 for v in subset if g.colors[v] == RED)
            if 2 * red == k:
                return True
    return False


def rst_oracle(points: Sequence[tuple[int, int]], budget: OracleBudget | None = None) -> int:
    """Exact minimum rectilinear Steiner tree length for integer points.

    Steiner points are restricted to the integer grid of the bounding box,
    which is sufficient for rectilinear Steiner minimal trees on integer
    terminals.  Computed by terminal-subset dynamic programming on the unit
    grid graph; edges have unit weight, so length equals edge count.
    """
    pts = [(int(x), int(y)) for x, y in points]
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points")
    if not pts:
        raise ValueError("need at least one point")
    if len(pts) > 5:
        raise CapacityError("rst oracle limited to 5 points")
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    if max(xs) - min(xs) > 6 or max(ys) - min(ys) > 6:
        raise CapacityError("rst oracle limited to coordinate spread 6")
    if len(pts) == 1:
        return 0
    nodes = [
        (x, y)
        for x in range(min(xs), max(xs) + 1)
        for y in range(min(ys), max(ys) + 1)
    ]
    index = {p: i for i, p in enumerate(nodes)}
    nv = len(nodes)
    adj = [[] for _ in range(nv)]
    for (x, y), i in index.items():
        for q in ((x + 1, y), (x, y + 1)):
            j = index.get(q)
            if j is not None:
                adj[i].append(j)
                adj[j].append(i)
    terms = [index[p] for p in pts]
    t = len(terms)
    full = (1 << t) - 1
    inf = float("inf")
    dp = [[inf] * nv for _ in range(full + 1)]
    for i, term in enumerate(terms):
        dp[1 << i][term] = 0
    for mask in range(1, full + 1):
        row = dp[mask]
        sub = (mask - 1) & mask
        while sub:
            other = mask ^ sub
            if sub < other:
                a, b = dp[sub], dp[other]
                for v in range(nv):
                    s = a[v] + b[v]
                    if s < row[v]:
                        row[v] = s
            sub = (sub - 1) & mask
        heap = [(d, v) for v, d in enumerate(row) if d < inf]
        heapq.heapify(heap)
        while heap:
            d, v = heapq.heappop(heap)
            if d > row[v]:
                continue
            for w in adj[v]:
                nd = d + 1
                if nd < row[w]:
                    row[w] = nd
                    heapq.heappush(heap, (nd, w))
    return int(min(dp[full]))


def dominating_set_oracle(g: BicoloredGraph, k: int, budget: OracleBudget | None = None) -> bool:
    """Exact decision: does g have a dominating set of size at most k?"""
    if g.n > 12:
        raise CapacityError(f"n={g.n} exceeds dominating-set oracle cap 12")
    if k < 0:
        return False
    if g.n == 0:
        return True
    closed = [g.adj[v] | {v} for v in range(g.n)]
    for size in range(1, min(k, g.n) + 1):
        for combo in itertools.combinations(range(g.n), size):
            covered = set()
            for v in combo:
                covered |= closed[v]
            if len(covered) == g.n:
                return True
    return False
