"""Minimum-cardinality Steiner vertex selection.

Three engines live here: a greedy sweep for interval graphs, a cubic-time
dynamic program for permutation graphs, and exact exponential oracles for
cross-checking both on small instances.  All of them return the set D of
non-terminal vertices whose addition makes the terminal set connected.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Sequence

from .graph import BicoloredGraph, is_connected
from .models import IntervalModel, PermutationModel
from .oracle import DEFAULT_BUDGET, CapacityError, OracleBudget


class DisconnectedSubstrateError(RuntimeError):
    """The greedy ran out of extending intervals with components left over."""


@dataclass(frozen=True)
class SteinerResult:
    steiner_vertices: tuple[int, ...]
    connected: bool


def _interval_components(intervals, ids):
    """Components of an interval set, left to right; ids sorted by left end.

    Returns a list of (members, span_left, span_right).  Component unions are
    contiguous and pairwise disjoint, so left-to-right order is well defined.
    """
    order = sorted(ids, key=lambda v: intervals[v][0])
    comps = []
    cur: list[int] = []
    reach = None
    for v in order:
        l, r = intervals[v]
        if cur and l < reach:
            cur.append(v)
            reach = max(reach, r)
        else:
            if cur:
                comps.append((cur, intervals[cur[0]][0], reach))
            cur = [v]
            reach = r
    if cur:
        comps.append((cur, intervals[cur[0]][0], reach))
    return comps


def steiner_intervals(intervals, terminals, pool) -> list[int]:
    """Greedy sweep over canonical interval endpoints.

    Repeatedly take the component of terminals-plus-chosen whose rightmost
    endpoint is leftmost, and add the interval from the pool that crosses that
    endpoint and reaches furthest right.  Raises DisconnectedSubstrateError if
    no interval crosses while several components remain.
    """
    comps = _interval_components(intervals, terminals)
    if len(comps) <= 1:
        return []
    pool_by_l = sorted(pool, key=lambda v: intervals[v][0])
    reach = comps[0][2]
    next_comp = 1
    ptr = 0
    heap: list[tuple[int, int]] = []  # (-right, vertex)
    chosen: list[int] = []
    while next_comp < len(comps):
        while ptr < len(pool_by_l) and intervals[pool_by_l[ptr]][0] < reach:
            v = pool_by_l[ptr]
            heapq.heappush(heap, (-intervals[v][1], v))
            ptr += 1
        while heap and -heap[0][0] <= reach:
            heapq.heappop(heap)
        if not heap:
            raise DisconnectedSubstrateError(
                "no interval crosses the first component's right endpoint"
            )
        negr, v = heapq.heappop(heap)
        chosen.append(v)
        reach = -negr
        while next_comp < len(comps) and comps[next_comp][1] < reach:
            reach = max(reach, comps[next_comp][2])
            next_comp += 1
    return chosen


def select_steiners_interval(
    m: IntervalModel, g: BicoloredGraph, terminals: Sequence[int]
) -> SteinerResult:
    """Minimum Steiner vertex set connecting the terminals of an interval graph."""
    terms = sorted(set(terminals))
    if not terms:
        raise ValueError("terminals must be nonempty")
    for v in terms:
        if not (0 <= v < m.n):
            raise ValueError(f"terminal {v} out of range")
    pool = [v for v in range(m.n) if v not in set(terms)]
    chosen = steiner_intervals(m.ranks, terms, pool)
    return SteinerResult(tuple(sorted(chosen)), True)


# ---------------------------------------------------------------------------
# permutation graphs
# ---------------------------------------------------------------------------
#
# Order the vertices by top position and write b_i for the bottom position of
# the i-th vertex.  A set U = {w_1 < ... < w_m} in top order induces a
# connected subgraph iff for every prefix cut max(bottom of prefix) >
# min(bottom of suffix).  Scanning left to right, the pending cut constraints
# are summarized by two numbers: M, the maximum bottom seen so far, and r, the
# smallest still-unsatisfied cut threshold.  Adding a vertex with bottom b
# either satisfies everything pending (b < r, state becomes (M', M') with
# M' = max(M, b)) or leaves r unchanged while M grows.  A choice of vertices
# is connected exactly when its last pick has b < r at that moment.  Running
# a shortest-path search over states (position, r, M) yields the minimum
# number of non-terminal picks in O(n^3).


def steiner_permutation_pairs(bottoms, is_terminal) -> list[int] | None:
    """Core DP.  bottoms: bottom position per vertex in top order.

    Returns the chosen non-terminal indices, or None when no selection
    containing all terminals is connected.
    """
    n = len(bottoms)
    term_idx = [i for i in range(n) if is_terminal[i]]
    if not term_idx:
        raise ValueError("terminals must be nonempty")
    if len(term_idx) == 1:
        return []
    last_term = term_idx[-1]
    first_term = term_idx[0]

    # state: (r, M) after the most recent pick; trail is a linked list of
    # picked indices (index, parent) used to reconstruct the chosen set
    best_final: tuple[int, object] | None = None  # (cost, trail)
    layer: dict[tuple[int, int], tuple[int, object]] = {}

    def offer(d, key, val):
        old = d.get(key)
        if old is None or val[0] < old[0]:
            d[key] = val

    for i in range(n):
        b = bottoms[i]
        nxt: dict[tuple[int, int], tuple[int, object]] = {}
        cost_pick = 0 if is_terminal[i] else 1
        # transitions for existing states
        for (r, M), (cost, trail) in layer.items():
            # skip i (only allowed when i is not a terminal)
            if not is_terminal[i]:
                offer(nxt, (r, M), (cost, trail))
            # pick i
            c2 = cost + cost_pick
            t2 = (i, trail)
            if b < r:
                M2 = M if M > b else b
                if i >= last_term:
                    if best_final is None or c2 < best_final[0]:
                        best_final = (c2, t2)
                offer(nxt, (M2, M2), (c2, t2))
            else:
                offer(nxt, (r, M if M > b else b), (c2, t2))
        # i as the very first pick (allowed only up to the first terminal)
        if i <= first_term:
            offer(nxt, (b, b), (cost_pick, (i, None)))
        layer = nxt

    if best_final is None:
        return None
    picked = []
    trail = best_final[1]
    while trail is not None:
        idx, trail = trail
        picked.append(idx)
    return sorted(i for i in picked if not is_terminal[i])


def steiner_permutation(
    m: PermutationModel, g: BicoloredGraph, terminals: Sequence[int]
) -> SteinerResult:
    """Minimum Steiner vertex set on a connected permutation graph."""
    terms = set(terminals)
    if not terms:
        raise ValueError("terminals must be nonempty")
    for v in terms:
        if not (0 <= v < m.n):
            raise ValueError(f"terminal {v} out of range")
    if not is_connected(g, range(m.n)):
        raise ValueError("permutation graph must be connected")
    if len(terms) == 1:
        return SteinerResult((), True)
    order = sorted(range(m.n), key=lambda v: m.top[v])
    bottoms = [m.bottom[v] for v in order]
    flags = [v in terms for v in order]
    picked = steiner_permutation_pairs(bottoms, flags)
    if picked is None:
        # cannot happen on a connected substrate: picking every vertex works
        raise DisconnectedSubstrateError("no connected superset of terminals")
    return SteinerResult(tuple(sorted(order[i] for i in picked)), True)


# ---------------------------------------------------------------------------
# exact oracles
# ---------------------------------------------------------------------------


def steiner_exact_oracle(
    g: BicoloredGraph, terminals: Sequence[int], budget: OracleBudget | None = None
) -> SteinerResult:
    """Exact minimum Steiner vertex set by increasing-size subset search."""
    budget = budget or DEFAULT_BUDGET
    if g.n > budget.max_vertices:
        raise CapacityError(f"n={g.n} exceeds oracle cap {budget.max_vertices}")
    terms = sorted(set(terminals))
    if not terms:
        raise ValueError("terminals must be nonempty")
    if not is_connected(g, range(g.n)):
        raise ValueError("graph must be connected")
    if is_connected(g, terms):
        return SteinerResult((), True)
    others = [v for v in range(g.n) if v not in set(terms)]
    for size in range(1, len(others) + 1):
        for combo in itertools.combinations(others, size):
            if is_connected(g, terms + list(combo)):
                return SteinerResult(tuple(combo), True)
    raise DisconnectedSubstrateError("graph claims connected but search failed")


def steiner_size_dp(
    g: BicoloredGraph, terminals: Sequence[int], budget: OracleBudget | None = None
) -> int:
    """Minimum number of Steiner vertices via terminal-subset DP.

    Independent of the subset search above; used to cross-check it.  Node
    weights are 1 for non-terminals and 0 for terminals, and dp[S][v] is the
    cheapest connected superset of terminal subset S that contains v.
    """
    budget = budget or DEFAULT_BUDGET
    terms = sorted(set(terminals))
    if not terms:
        raise ValueError("terminals must be nonempty")
    if len(terms) > budget.max_terminals:
        raise CapacityError(
            f"{len(terms)} terminals exceed oracle cap {budget.max_terminals}"
        )
    n = g.n
    t = len(terms)
    cost = [0 if v in set(terms) else 1 for v in range(n)]
    full = (1 << t) - 1
    INF = float("inf")
    dp = [[INF] * n for _ in range(full + 1)]
    for i, v in enumerate(terms):
        dp[1 << i][v] = 0
    for mask in range(1, full + 1):
        row = dp[mask]
        sub = (mask - 1) & mask
        while sub:
            other = mask ^ sub
            if sub <= other:
                a, b = dp[sub], dp[other]
                for v in range(n):
                    merged = a[v] + b[v] - cost[v]
                    if merged < row[v]:
                        row[v] = merged
            sub = (sub - 1) & mask
        heap = [(d, v) for v, d in enumerate(row) if d < INF]
        heapq.heapify(heap)
        while heap:
            d, v = heapq.heappop(heap)
            if d > row[v]:
                continue
            for w in g.adj[v]:
                nd = d + cost[w]
                if nd < row[w]:
                    row[w] = nd
                    heapq.heappush(heap, (nd, w))
    best = min(dp[full])
    if best is INF:
        raise DisconnectedSubstrateError("terminals cannot be connected")
    return int(best)
