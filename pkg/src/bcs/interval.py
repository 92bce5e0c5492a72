"""Balanced connected subgraph solver for interval graphs.

For every ordered pair of intervals (u, v) with l_u <= l_v the candidate
window holds u, v, and every interval contained in [l_u, r_v].  Inside a
connected window the minority color class plus {u, v} is connected with a
minimum number of majority intervals and then padded back to balance; the
answer is the best window over all pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    BLUE,
    RED,
    BicoloredGraph,
    Solution,
    empty_solution,
    make_solution,
    validate_solution,
)
from .models import IntervalModel, interval_graph
from .steiner import DisconnectedSubstrateError, _interval_components, steiner_intervals


@dataclass(frozen=True)
class Window:
    u: int
    v: int
    members: tuple[int, ...]


def candidate_window(m: IntervalModel, u: int, v: int) -> Window:
    """Window for the ordered pair (u, v): contained intervals plus u and v."""
    lu = m.ranks[u][0]
    lv, rv = m.ranks[v]
    if lu > lv:
        raise ValueError("candidate_window expects l_u <= l_v")
    members = {u, v}
    for w in range(m.n):
        lw, rw = m.ranks[w]
        if lu <= lw and rw <= rv:
            members.add(w)
    return Window(u, v, tuple(sorted(members)))


def _window_balanced_set(m, window_members, u, v):
    """Core of the per-window algorithm on canonical ranks.

    Returns the chosen vertex list (global ids) or None when the window is
    disconnected or cannot host a balanced set through u and v.
    """
    ranks = m.ranks
    comps = _interval_components(ranks, window_members)
    if len(comps) > 1:
        return None
    reds = [w for w in window_members if m.colors[w] == RED]
    blues = [w for w in window_members if m.colors[w] == BLUE]
    if not reds or not blues:
        return None
    if len(blues) <= len(reds):
        minority, majority = blues, reds
    else:
        minority, majority = reds, blues
    forced = {u, v}
    terminals = sorted(set(minority) | forced)
    pool = [w for w in window_members if w not in set(terminals)]
    try:
        steiners = steiner_intervals(ranks, terminals, pool)
    except DisconnectedSubstrateError:
        return None
    minority_set = set(minority)
    used_majority = len(steiners) + sum(1 for w in forced if w not in minority_set)
    target = len(minority)
    if used_majority > target:
        return None
    chosen = set(terminals) | set(steiners)
    if used_majority < target:
        # every window interval lies inside the union of a connected set that
        # contains both u and v, so leftovers stay adjacent to the solution
        need = target - used_majority
        lo = min(ranks[u][0], ranks[v][0])
        hi = max(ranks[u][1], ranks[v][1])
        for w in majority:
            if need == 0:
                break
            if w in chosen:
                continue
            lw, rw = ranks[w]
            assert lw < hi and rw > lo, "window padding candidate not adjacent"
            chosen.add(w)
            need -= 1
        if need:
            return None  # not enough majority intervals; cannot happen
    return sorted(chosen)


def bcs_window(m: IntervalModel, g: BicoloredGraph, w: Window) -> Solution:
    """Best balanced connected set in one window, forced through u and v."""
    picked = _window_balanced_set(m, w.members, w.u, w.v)
    if picked is None:
        return empty_solution("interval")
    sol = make_solution(g, picked, "interval")
    assert validate_solution(g, sol)
    return sol


def bcs_interval(m: IntervalModel, g: BicoloredGraph | None = None) -> Solution:
    """Maximum balanced connected subgraph of a bicolored interval model."""
    if m.n == 0:
        return empty_solution("interval")
    if g is None:
        g = interval_graph(m)
    ranks = m.ranks
    order = sorted(range(m.n), key=lambda w: ranks[w][0])
    best: list[int] | None = None
    best_size = 0
    cap = 2 * min(
        sum(1 for c in m.colors if c == RED),
        sum(1 for c in m.colors if c == BLUE),
    )
    if cap == 0:
        return empty_solution("interval")
    for i, u in enumerate(order):
        for j in range(i, len(order)):
            v = order[j]
            rv = ranks[v][1]
            members = []
            red = blue = 0
            for w in order[i:]:  # every w here already has l_w >= l_u
                if ranks[w][1] <= rv:
                    members.append(w)
                    if m.colors[w] == RED:
                        red += 1
                    else:
                        blue += 1
            if ranks[u][1] > rv:  # u sticks out right of the window
                members.append(u)
                if m.colors[u] == RED:
                    red += 1
                else:
                    blue += 1
            bound = 2 * min(red, blue)
            if bound <= best_size:
                continue
            picked = _window_balanced_set(m, members, u, v)
            if picked is not None and len(picked) > best_size:
                best, best_size = picked, len(picked)
                if best_size == cap:
                    break
        if best_size == cap:
            break
    if best is None:
        return empty_solution("interval")
    sol = make_solution(g, best, "interval")
    assert validate_solution(g, sol)
    return sol
