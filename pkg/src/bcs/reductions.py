"""Hardness-reduction instance generators.

Each generator builds a concrete search instance from a source problem
instance together with the target solution size that makes the source
question equivalent to a balanced-connected-subgraph question.  The
constructions stay machine-checkable at small scale via the oracles.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .graph import BLUE, RED, BicoloredGraph
from .models import PointSetModel

CASE_TAGS = ("rst_case1", "rst_case2", "grid", "square", "domset")


@dataclass(frozen=True)
class ReductionOutput:
    instance: object  # PointSetModel or BicoloredGraph
    target_size: int
    case_tag: str
    provenance: dict


def _rst_points(points, length):
    pts = [(int(x), int(y)) for x, y in points]
    if not pts:
        raise ValueError("need at least one point")
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points")
    if length < 0:
        raise ValueError("tree length bound must be non-negative")
    if len(pts) == 1 and length == 0:
        warnings.warn(
            "single point with zero length bound is a degenerate reduction input",
            stacklevel=3,
        )
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    grid = [
        (x, y)
        for x in range(min(xs), max(xs) + 1)
        for y in range(min(ys), max(ys) + 1)
    ]
    terminal = set(pts)
    coords = list(grid)
    colors = [RED if p in terminal else BLUE for p in coords]
    # leftmost point of the input, anchor of the appended path
    p_l = min(pts)
    np_ = len(pts)
    if length + 1 >= 2 * np_:
        case = "rst_case1"
        path_len = length - 2 * np_ + 1
        for i in range(1, path_len + 1):
            coords.append((p_l[0] - i, p_l[1]))
            colors.append(RED)
        target = 2 * (length - np_ + 1)
    else:
        case = "rst_case2"
        path_len = 2 * np_ - length
        for i in range(1, path_len + 1):
            coords.append((p_l[0] - i, p_l[1]))
            colors.append(BLUE)
        coords.append((p_l[0] - path_len - 1, p_l[1]))
        colors.append(RED)
        target = 2 * (np_ + 1)
    return coords, colors, case, target, p_l


def reduce_rst_to_unit_disk(points, length: int) -> ReductionOutput:
    """Unit-disk instance encoding "is there a rectilinear Steiner tree"."""
    coords, colors, case, target, _ = _rst_points(points, length)
    model = PointSetModel(tuple(coords), tuple(colors), "unit_disk")
    return ReductionOutput(
        model,
        target,
        case,
        {"source": "rst", "points": [list(p) for p in points], "length": length},
    )


def reduce_rst_to_unit_square(points, length: int) -> ReductionOutput:
    """Same construction carried by unit squares instead of disks."""
    coords, colors, case, target, _ = _rst_points(points, length)
    model = PointSetModel(tuple(coords), tuple(colors), "unit_square")
    return ReductionOutput(
        model,
        target,
        "square",
        {"source": "rst", "points": [list(p) for p in points],
         "length": length, "rst_case": case},
    )


def reduce_rst_to_complete_grid(points, length: int) -> ReductionOutput:
    """Fill the construction up to a complete rectangular grid with blues."""
    coords, colors, case, target, p_l = _rst_points(points, length)
    occupied = dict(zip(coords, colors))
    xs = [x for x, _ in coords]
    ys = [y for _, y in coords]
    full_coords = []
    full_colors = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            full_coords.append((x, y))
            full_colors.append(occupied.get((x, y), BLUE))
    model = PointSetModel(tuple(full_coords), tuple(full_colors), "grid")
    return ReductionOutput(
        model,
        target,
        "grid",
        {"source": "rst", "points": [list(p) for p in points],
         "length": length, "rst_case": case},
    )


def reduce_domset_to_outer_string(g: BicoloredGraph, k: int) -> ReductionOutput:
    """Dominating-set instance (plain graph, colors ignored) to a bicolored graph.

    Vertex layout of the output: red originals v_0..v_{n-1}, blue copies
    v'_0..v'_{n-1}, a red path r_1..r_k, and a blue path b_1..b_n, with
    crossing edges per input edge, a clique on the copies, a perfect matching
    between originals and copies, and the two path hook-ups.
    """
    n = g.n
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    colors = [RED] * n + [BLUE] * n + [RED] * k + [BLUE] * n
    copy = lambda i: n + i
    red_path = lambda j: 2 * n + j  # j in 0..k-1
    blue_path = lambda j: 2 * n + k + j  # j in 0..n-1
    edges = []
    for u, v in g.edges:
        edges.append((u, copy(v)))
        edges.append((copy(u), v))
    for i in range(n):
        for j in range(i + 1, n):
            edges.append((copy(i), copy(j)))
    for i in range(n):
        edges.append((i, copy(i)))
    for j in range(k - 1):
        edges.append((red_path(j), red_path(j + 1)))
    for j in range(n - 1):
        edges.append((blue_path(j), blue_path(j + 1)))
    edges.append((blue_path(n - 1), red_path(k - 1)))
    edges.append((blue_path(0), 0))
    out = BicoloredGraph(colors, edges)
    return ReductionOutput(
        out,
        2 * (n + k),
        "domset",
        {"source": "dominating_set", "n": n, "k": k,
         "edges": [list(e) for e in g.edges]},
    )
