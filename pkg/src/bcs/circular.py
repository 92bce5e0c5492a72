"""Balanced connected subgraph solver for circular-arc graphs.

Non-covering arc families are cut at an uncovered point and handed to the
interval solver.  Covering families are handled by three exhaustive case
searches:

* case A: solutions leaving a gap.  Every ordered arc pair (u, v) whose
  clockwise gap (r_u, l_v) is avoided by both arcs defines a window that cuts
  open into an interval instance solved through u and v.
* case B1: solutions using every minority arc whose connector still leaves a
  gap.  Windows containing all minority arcs are linearized, the minority set
  is connected with a minimum Steiner set, and the result is padded with
  majority arcs anywhere on the circle.
* case B2: connector covers the circle.  One minority component C is the
  surgery site: commit either one majority arc covering C's span or a pair
  crossing its two span endpoints, drop the rest of C's neighborhood, replace
  the commitment by synthetic terminal intervals, and cut the circle inside
  C's span (every remaining arc avoids it).  A minimal connector never needs
  more than those committed arcs around C: an arc inside the span connects
  nothing the span itself does not, and a second crosser on the same side is
  contained in the footprint of the furthest one.

Case A returns the best window solution of any size; the two B cases return
solutions of the full target size (twice the minority count) or nothing.
The final answer is the best over the cases, and on ties the later case wins
for reporting purposes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    BLUE,
    RED,
    BicoloredGraph,
    Solution,
    connected_components,
    empty_solution,
    is_connected,
    make_solution,
    validate_solution,
)
from .models import (
    CircularArcModel,
    arc_contains,
    arcs_cover_circle,
    circular_arc_graph,
    linearize_arcs,
    uncovered_point,
)
from .interval import bcs_interval, _window_balanced_set
from .steiner import DisconnectedSubstrateError, steiner_intervals


def _in_open_gap(x, gap_start, gap_end, circ) -> bool:
    """Whether position x lies strictly inside the clockwise gap."""
    span = (gap_end - gap_start) % circ
    off = (x - gap_start) % circ
    return 0 < off < span


@dataclass(frozen=True)
class ArcWindow:
    """Arcs contained clockwise between l_v and r_u, plus u and v.

    The open gap (r_u, l_v) is avoided by every member, so cutting there
    (``cut``) linearizes the window into an interval instance.
    """

    u: int
    v: int
    members: tuple[int, ...]
    cut: float


def arc_window(m: CircularArcModel, u: int, v: int) -> ArcWindow | None:
    """The window of the ordered pair (u, v), or None if no cut region exists."""
    circ = m.circumference
    lu, ru = m.ranks[u]
    lv, rv = m.ranks[v]
    if u != v and (lv - ru) % circ == 0:
        return None
    if _in_open_gap(lu, ru, lv, circ) or _in_open_gap(rv, ru, lv, circ):
        return None
    cut = ru + 0.5  # strictly inside the gap, clear of every endpoint
    base = int(cut) + 1
    lv2 = (lv - base) % circ
    ru2 = (ru - base) % circ
    members = []
    for w in range(m.n):
        if w == u or w == v:
            continue
        lw, rw = m.ranks[w]
        if arc_contains(cut, (lw, rw), circ):
            continue
        if lv2 <= (lw - base) % circ and (rw - base) % circ <= ru2:
            members.append(w)
    members.append(v)
    if u != v:
        members.append(u)
    return ArcWindow(u, v, tuple(members), cut)


def _pad_globally(g, chosen: set, candidates, need: int) -> bool:
    """Grow chosen by ``need`` vertices adjacent to it, if possible."""
    remaining = [v for v in candidates if v not in chosen]
    while need > 0:
        for idx, v in enumerate(remaining):
            if g.adj[v] & chosen:
                chosen.add(v)
                del remaining[idx]
                need -= 1
                break
        else:
            return False
    return True


def _minority_majority(m):
    blues = [v for v in range(m.n) if m.colors[v] == BLUE]
    reds = [v for v in range(m.n) if m.colors[v] == RED]
    if len(blues) <= len(reds):
        return blues, reds
    return reds, blues


def bcs_case_a(m: CircularArcModel, g: BicoloredGraph | None = None) -> Solution:
    """Best solution over all cut-open windows (partial-cover case)."""
    if g is None:
        g = circular_arc_graph(m)
    best: Solution = empty_solution("circular:case_a")
    for u in range(m.n):
        for v in range(m.n):
            w = arc_window(m, u, v)
            if w is None:
                continue
            local = linearize_arcs(m, w.cut, w.members)
            back = list(w.members)
            picked = _window_balanced_set(
                local, range(local.n), back.index(v), back.index(u)
            )
            if picked is None:
                continue
            if len(picked) > best.size:
                sol = make_solution(g, [back[i] for i in picked], "circular:case_a")
                assert validate_solution(g, sol)
                best = sol
    return best


def bcs_case_b1(m: CircularArcModel, g: BicoloredGraph | None = None) -> Solution:
    """All minority arcs, Steiner inside a window, padding anywhere."""
    if g is None:
        g = circular_arc_graph(m)
    minority, majority = _minority_majority(m)
    tag = "circular:case_b1"
    if not minority:
        return empty_solution(tag)
    minority_set = set(minority)
    target = len(minority)
    for u in range(m.n):
        for v in range(m.n):
            w = arc_window(m, u, v)
            if w is None or not minority_set <= set(w.members):
                continue
            local = linearize_arcs(m, w.cut, w.members)
            back = list(w.members)
            terms = [i for i, x in enumerate(back) if x in minority_set]
            pool = [i for i, x in enumerate(back) if x not in minority_set]
            try:
                steiners = steiner_intervals(local.ranks, terms, pool)
            except DisconnectedSubstrateError:
                continue
            if len(steiners) > target:
                continue
            chosen = set(minority) | {back[i] for i in steiners}
            if _pad_globally(g, chosen, majority, target - len(steiners)):
                sol = make_solution(g, chosen, tag)
                assert validate_solution(g, sol)
                return sol
    return empty_solution(tag)


def _component_span(m, members):
    """Clockwise span (l, r) of a connected arc set, or None if it covers."""
    circ = m.circumference
    segs = []
    for w in members:
        l, r = m.ranks[w]
        if l < r:
            segs.append((l, r))
        else:
            segs.append((l, circ))
            segs.append((0, r))
    segs.sort()
    merged = [list(segs[0])]
    for s, e in segs[1:]:
        if s <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], e)
        else:
            merged.append([s, e])
    if len(merged) == 1:
        s, e = merged[0]
        if s == 0 and e >= circ:
            return None
        return (s, e)
    if len(merged) == 2 and merged[0][0] == 0 and merged[1][1] >= circ:
        if merged[1][0] <= merged[0][1]:
            return None  # the two pieces close the circle
        return (merged[1][0], merged[0][1])
    raise AssertionError("connected component with non-contiguous union")


def _covers(m, arc_id, span):
    """Whether the arc's span contains the clockwise span (l, r)."""
    circ = m.circumference
    li, ri = m.ranks[arc_id]
    length = (ri - li) % circ
    a = (span[0] - li) % circ
    b = (span[1] - li) % circ
    return a <= b <= length


def _find_cut(m, span, synth_arcs):
    """A half-rank position inside the open span avoided by the synthetics."""
    circ = m.circumference
    l, r = span
    width = (r - l) % circ
    for step in range(width):
        c = ((l + step) % circ) + 0.5
        if 0 < ((c - l) % circ) < width and not any(
            arc_contains(c, a, circ) for a in synth_arcs
        ):
            return c
    return None


@dataclass(frozen=True)
class SplicedInstance:
    """Cut-open interval instance produced by the component surgery.

    ``items`` are interval endpoints on the cut line for the kept real arcs
    followed by the two synthetic terminals standing in for the committed
    arcs' footprints; ``ids`` maps the real positions back to arc ids.
    ``red_budget`` is how many further majority arcs the Steiner run may
    spend after the commitment.
    """

    component: tuple[int, ...]
    committed: tuple[int, ...]
    items: tuple[tuple[int, int], ...]
    ids: tuple[int, ...]
    terminals: tuple[int, ...]
    pool: tuple[int, ...]
    red_budget: int


def _splice(m, comp, committed, synths, cut, other_terms, pool_global,
            minority_set, target):
    circ = m.circumference
    base = int(cut) + 1
    pairs = []
    ids = []
    for w in other_terms + pool_global:
        lw, rw = m.ranks[w]
        if arc_contains(cut, (lw, rw), circ):
            continue  # cannot happen: remaining arcs avoid the span
        pairs.append(((lw - base) % circ, (rw - base) % circ))
        ids.append(w)
    n_real = len(ids)
    for sl, sr in synths:
        pairs.append(((sl - base) % circ, (sr - base) % circ))
    terms = [i for i in range(n_real) if ids[i] in minority_set]
    terms += [n_real, n_real + 1]
    pool = [i for i in range(n_real) if ids[i] not in minority_set]
    return SplicedInstance(
        tuple(comp),
        tuple(committed),
        tuple(pairs),
        tuple(ids),
        tuple(terms),
        tuple(pool),
        target - len(committed),
    )


def bcs_case_b2(
    m: CircularArcModel,
    g: BicoloredGraph | None = None,
    surgery_component: int | None = None,
) -> Solution:
    """Connector covers the circle: component surgery per minority component.

    ``surgery_component`` restricts the search to one component of the
    minority set (used to probe that the choice does not change the result);
    the default tries every component and the commit-free shortcut.
    """
    if g is None:
        g = circular_arc_graph(m)
    minority, majority = _minority_majority(m)
    tag = "circular:case_b2"
    if not minority:
        return empty_solution(tag)
    target = len(minority)
    comps = connected_components(g, minority)

    def finish(committed, steiners):
        used = len(committed) + len(steiners)
        if used > target:
            return None
        chosen = set(minority) | set(committed) | set(steiners)
        if not _pad_globally(g, chosen, majority, target - used):
            return None
        sol = make_solution(g, chosen, tag)
        assert validate_solution(g, sol)
        return sol

    if (
        len(comps) == 1
        and surgery_component in (None, 0)
        and _component_span(m, comps[0]) is None
    ):
        # the minority arcs alone cover the circle: connected, no commitment
        sol = finish([], [])
        if sol is not None:
            return sol

    comp_list = list(enumerate(comps))
    if surgery_component is not None:
        comp_list = [e for e in comp_list if e[0] == surgery_component]

    circ = m.circumference
    minority_set = set(minority)
    for _, comp in comp_list:
        span = _component_span(m, comp)
        if span is None:
            continue  # component covers the circle; shortcut above applies
        ncomp = set()
        for w in comp:
            ncomp |= g.adj[w]
        ncomp -= minority_set
        other_terms = [w for w in minority if w not in set(comp)]
        pool_global = [w for w in majority if w not in ncomp]
        l_c, r_c = span

        branches = []
        for i in ncomp:
            if _covers(m, i, span):
                li, ri = m.ranks[i]
                branches.append(([i], [(li, l_c), (r_c, ri)]))
        crossers_l = [
            a for a in ncomp
            if arc_contains(l_c, m.ranks[a], circ) and not _covers(m, a, span)
        ]
        crossers_r = [
            b for b in ncomp
            if arc_contains(r_c, m.ranks[b], circ) and not _covers(m, b, span)
        ]
        for a in crossers_l:
            for b in crossers_r:
                if a == b:
                    continue
                la = m.ranks[a][0]
                rb = m.ranks[b][1]
                branches.append(([a, b], [(la, l_c), (r_c, rb)]))

        for committed, synths in branches:
            cut = _find_cut(m, span, synths)
            if cut is None:
                # synthetic footprints blanket the span: the committed arcs
                # wrap the rest of the circle, so everything touches them
                if is_connected(g, minority + committed):
                    sol = finish(committed, [])
                    if sol is not None:
                        return sol
                continue
            spliced = _splice(
                m, comp, committed, synths, cut, other_terms, pool_global,
                minority_set, target,
            )
            try:
                steiners = steiner_intervals(
                    spliced.items, spliced.terminals, spliced.pool
                )
            except DisconnectedSubstrateError:
                continue
            if len(steiners) > spliced.red_budget:
                continue
            sol = finish(committed, [spliced.ids[i] for i in steiners])
            if sol is not None:
                return sol
    return empty_solution(tag)


def bcs_circular_arc(m: CircularArcModel) -> Solution:
    """Maximum balanced connected subgraph of a bicolored circular-arc model."""
    if m.n == 0:
        return empty_solution("circular:linear")
    g = circular_arc_graph(m)
    if not arcs_cover_circle(m):
        cut = uncovered_point(m)
        local = linearize_arcs(m, cut, range(m.n))
        sol = bcs_interval(local)
        out = make_solution(g, sol.vertices, "circular:linear")
        assert validate_solution(g, out)
        return out
    candidates = [
        (bcs_case_a(m, g), 1),
        (bcs_case_b1(m, g), 2),
        (bcs_case_b2(m, g), 3),
    ]
    best, _ = max(candidates, key=lambda e: (e[0].size, e[1]))
    return best
