"""Balanced connected subgraph solver for permutation graphs.

Enumerates the order-contiguous vertex ranges of the top line; inside every
connected range the minority color class becomes the terminal set of a
Steiner computation, and the result is padded back to balance.  Any vertex of
a connected range has a neighbor in a connected subgraph containing the range
extremes, which makes the padding safe; the solver still asserts it at run
time.
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
from .models import PermutationModel, permutation_graph
from .steiner import steiner_permutation_pairs


@dataclass(frozen=True)
class OrderedRange:
    i: int
    j: int
    members: tuple[int, ...]


def _top_order(m: PermutationModel) -> list[int]:
    return sorted(range(m.n), key=lambda v: m.top[v])


def ordered_range(m: PermutationModel, i: int, j: int) -> OrderedRange:
    """Range of vertices at top-order positions i..j (1-based, inclusive)."""
    if not 1 <= i < j <= m.n:
        raise ValueError("need 1 <= i < j <= n")
    order = _top_order(m)
    return OrderedRange(i, j, tuple(order[i - 1 : j]))


def _range_connected(bottoms) -> bool:
    """Connectivity of a top-contiguous range via the prefix crossing rule."""
    k = len(bottoms)
    if k <= 1:
        return True
    suffix_min = [0] * k
    cur = bottoms[-1]
    for t in range(k - 1, -1, -1):
        cur = min(cur, bottoms[t])
        suffix_min[t] = cur
    prefix_max = bottoms[0]
    for t in range(k - 1):
        if prefix_max < suffix_min[t + 1]:
            return False
        prefix_max = max(prefix_max, bottoms[t + 1])
    return True


def _solve_range(m, members):
    """Balanced set of size min(2r, 2b) inside one connected range, or None."""
    reds = [v for v in members if m.colors[v] == RED]
    blues = [v for v in members if m.colors[v] == BLUE]
    if not reds or not blues:
        return None
    minority = blues if len(blues) <= len(reds) else reds
    majority = reds if minority is blues else blues
    minority_set = set(minority)
    bottoms = [m.bottom[v] for v in members]
    flags = [v in minority_set for v in members]
    picked = steiner_permutation_pairs(bottoms, flags)
    if picked is None or len(picked) > len(minority):
        return None
    chosen = set(minority) | {members[t] for t in picked}
    need = len(minority) - len(picked)
    if need:
        adjacency_ok = _pad_majority(m, members, chosen, majority, need)
        if not adjacency_ok:
            return None
    return sorted(chosen)


def _pad_majority(m, members, chosen, majority, need) -> bool:
    """Grow ``chosen`` by ``need`` majority vertices, one adjacent at a time."""
    remaining = [v for v in majority if v not in chosen]
    while need and remaining:
        for idx, v in enumerate(remaining):
            if any(
                (m.top[v] - m.top[w]) * (m.bottom[v] - m.bottom[w]) < 0
                for w in chosen
            ):
                chosen.add(v)
                del remaining[idx]
                need -= 1
                break
        else:
            raise AssertionError("range padding found no adjacent majority vertex")
    return need == 0


def bcs_range(m: PermutationModel, g: BicoloredGraph, rng: OrderedRange) -> Solution:
    """Best balanced connected set within one order-contiguous range."""
    bottoms = [m.bottom[v] for v in rng.members]
    if not _range_connected(bottoms):
        return empty_solution("permutation")
    picked = _solve_range(m, list(rng.members))
    if picked is None:
        return empty_solution("permutation")
    sol = make_solution(g, picked, "permutation")
    assert validate_solution(g, sol)
    return sol


def bcs_permutation(m: PermutationModel, g: BicoloredGraph | None = None) -> Solution:
    """Maximum balanced connected subgraph of a bicolored permutation model."""
    if m.n == 0:
        return empty_solution("permutation")
    if g is None:
        g = permutation_graph(m)
    order = _top_order(m)
    n = m.n
    cap = 2 * min(
        sum(1 for c in m.colors if c == RED),
        sum(1 for c in m.colors if c == BLUE),
    )
    if cap == 0:
        return empty_solution("permutation")
    best: list[int] | None = None
    best_size = 0
    for i in range(n):
        for j in range(i + 1, n):
            members = order[i : j + 1]
            reds = sum(1 for v in members if m.colors[v] == RED)
            blues = len(members) - reds
            if 2 * min(reds, blues) <= best_size:
                continue
            bottoms = [m.bottom[v] for v in members]
            if not _range_connected(bottoms):
                continue
            picked = _solve_range(m, members)
            if picked is not None and len(picked) > best_size:
                best, best_size = picked, len(picked)
                if best_size == cap:
                    break
        if best_size == cap:
            break
    if best is None:
        return empty_solution("permutation")
    sol = make_solution(g, best, "permutation")
    assert validate_solution(g, sol)
    return sol
