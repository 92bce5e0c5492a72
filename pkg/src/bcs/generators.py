"""Seeded random instance generators for tests, verification sweeps, and the
command line.  Everything is driven by an explicit random.Random so runs are
reproducible from the seed alone.
"""

from __future__ import annotations

import random

from .graph import BLUE, RED, BicoloredGraph
from .models import (
    CircularArcModel,
    IntervalModel,
    PermutationModel,
    PointSetModel,
)


def _colors(rng, n, red_prob=0.5):
    return tuple(RED if rng.random() < red_prob else BLUE for _ in range(n))


def random_interval_model(n: int, rng: random.Random, red_prob: float = 0.5) -> IntervalModel:
    items = []
    for _ in range(n):
        a = rng.uniform(0.0, 10.0)
        b = rng.uniform(0.2, 4.0)
        items.append((a, a + b))
    return IntervalModel(tuple(items), _colors(rng, n, red_prob))


def _red_ring(start: float, end: float, count: int, rng: random.Random):
    """Red arcs jointly covering the clockwise stretch start -> end.

    Consecutive arcs overlap slightly and the last one overshoots the end by
    less than 0.012 turns, so the chain stays local to the stretch.
    """
    span = (end - start) % 1.0 or 1.0
    cuts = sorted(rng.uniform(0.08, 0.92) for _ in range(count - 1))
    points = [0.0] + cuts + [1.0]
    arcs = []
    for i in range(count):
        a = (start + span * points[i]) % 1.0
        ln = span * (points[i + 1] - points[i]) + 0.004 + rng.uniform(0.0, 0.008)
        arcs.append((a, ln))
    return arcs


def random_arc_model(
    n: int, rng: random.Random, family: str = "free", red_prob: float = 0.5
) -> CircularArcModel:
    """Random circular-arc models.

    free    -- independent arcs, usually not covering the circle
    cover   -- long arcs, usually covering
    aish    -- covering ring with two far-apart lone blues: the optimum stays
               below twice the minority count, so only gapped solutions exist
    b1ish   -- two adjacent blue clusters joined by one local red connector;
               distant ring reds cover the circle but make every committed
               covering structure too expensive
    b2ish   -- blue clusters bridged only by long majority arcs, so the best
               connector covers the circle
    """
    if family == "free":
        arcs = tuple(
            (rng.random(), rng.uniform(0.03, 0.35)) for _ in range(n)
        )
        return CircularArcModel(arcs, _colors(rng, n, red_prob))
    if family == "cover":
        arcs = tuple(
            (rng.random(), rng.uniform(0.2, 0.75)) for _ in range(n)
        )
        return CircularArcModel(arcs, _colors(rng, n, red_prob))
    if family == "aish":
        blues = 2
        ring = max(4, n - blues)
        arcs = _red_ring(0.0, 1.0, ring, rng)
        colors = [RED] * len(arcs)
        for pos in (0.0, 0.5):
            start = (pos + rng.uniform(0.0, 0.04)) % 1.0
            arcs.append((start, rng.uniform(0.02, 0.05)))
            colors.append(BLUE)
        return CircularArcModel(tuple(arcs), tuple(colors))
    if family == "b1ish":
        # cluster region [0, ~0.1): blue1, connector, blue2; ring elsewhere
        arcs = [(0.0 + rng.uniform(0, 0.005), 0.04)]
        colors = [BLUE]
        arcs.append((0.02 + rng.uniform(0, 0.005), 0.06))
        colors.append(RED)
        arcs.append((0.06 + rng.uniform(0, 0.005), 0.03 + rng.uniform(0, 0.01)))
        colors.append(BLUE)
        ring = max(4, n - 3)
        for a in _red_ring(0.085, 1.0 + 0.005, ring, rng):
            arcs.append(a)
            colors.append(RED)
        return CircularArcModel(tuple(arcs), tuple(colors))
    if family == "b2ish":
        arcs = []
        colors = []
        clusters = 2 if n < 9 else rng.choice((2, 3))
        blues = max(2, (n + 1) // 2)
        for i in range(blues):
            c = i % clusters
            start = (c / clusters + rng.uniform(0.0, 0.08)) % 1.0
            arcs.append((start, rng.uniform(0.04, 0.1)))
            colors.append(BLUE)
        rest = n - blues
        for i in range(rest):
            c = i % clusters
            # majority arcs spanning from one cluster across to the next
            start = (c / clusters + rng.uniform(0.04, 0.12)) % 1.0
            arcs.append((start, rng.uniform(1.0 / clusters, 1.0 / clusters + 0.2)))
            colors.append(RED)
        return CircularArcModel(tuple(arcs), tuple(colors))
    raise ValueError(f"unknown arc family {family!r}")


def random_permutation_model(n: int, rng: random.Random, red_prob: float = 0.5) -> PermutationModel:
    bottom = list(range(1, n + 1))
    rng.shuffle(bottom)
    return PermutationModel(
        tuple(range(1, n + 1)), tuple(bottom), _colors(rng, n, red_prob)
    )


def random_point_set(
    n: int, rng: random.Random, shape: str = "unit_disk", spread: float = 4.0
) -> PointSetModel:
    pts = set()
    while len(pts) < n:
        if shape == "grid":
            pts.add((rng.randrange(int(spread) + 1), rng.randrange(int(spread) + 1)))
        else:
            pts.add((round(rng.uniform(0, spread), 3), round(rng.uniform(0, spread), 3)))
    pts = sorted(pts)
    return PointSetModel(tuple(pts), _colors(rng, n), shape)


def random_bicolored_graph(
    n: int, rng: random.Random, p: float = 0.4, red_prob: float = 0.5
) -> BicoloredGraph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return BicoloredGraph(_colors(rng, n, red_prob), edges)


def random_connected_graph(n: int, rng: random.Random, p: float = 0.3,
                           red_prob: float = 0.5) -> BicoloredGraph:
    """Random graph plus a random spanning tree to force connectivity."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a = order[i]
        b = order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return BicoloredGraph(_colors(rng, n, red_prob), sorted(edges))


def planted_balanced_graph(n: int, k: int, rng: random.Random) -> BicoloredGraph:
    """A graph guaranteed to contain a balanced connected subgraph of size k.

    The first k vertices form a path with alternating colors; the rest is
    random noise attached loosely.
    """
    if k % 2 or k > n or k < 2:
        raise ValueError("k must be even with 2 <= k <= n")
    colors = []
    edges = []
    for i in range(k):
        colors.append(RED if i % 2 == 0 else BLUE)
        if i:
            edges.append((i - 1, i))
    for i in range(k, n):
        colors.append(RED if rng.random() < 0.5 else BLUE)
        edges.append((rng.randrange(i), i))
        if rng.random() < 0.3:
            other = rng.randrange(i)
            if other != edges[-1][0]:
                edges.append((other, i))
    seen = set()
    uniq = []
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            uniq.append(key)
    return BicoloredGraph(colors, uniq)


def random_model(kind: str, n: int, rng: random.Random, **kw):
    if kind == "interval":
        return random_interval_model(n, rng, **kw)
    if kind == "circular-arc":
        family = kw.pop("family", None)
        if family is None:
            family = rng.choice(("free", "cover", "b1ish", "b2ish"))
        return random_arc_model(n, rng, family=family, **kw)
    if kind == "permutation":
        return random_permutation_model(n, rng, **kw)
    if kind == "general":
        return random_bicolored_graph(n, rng, **kw)
    raise ValueError(f"unknown instance class {kind!r}")
