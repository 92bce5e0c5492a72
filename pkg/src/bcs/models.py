"""Geometric models (intervals, arcs, permutation diagrams, point sets) and
their compilation into bicolored intersection graphs.

Endpoint canonicalization: interval and arc endpoints are replaced by their
rank in the sorted order of (value, vertex id).  This makes all endpoints
pairwise distinct integers without changing intersections of inputs whose
endpoints were already distinct; exact ties are resolved deterministically by
vertex id.  All downstream solvers work on the canonical ranks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import COLORS, BicoloredGraph


def _check_colors(colors):
    for c in colors:
        if c not in COLORS:
            raise ValueError(f"unknown color {c!r}")


def _rank_endpoints(points):
    """Map (value, vertex id) pairs to dense distinct integer ranks."""
    order = sorted(range(len(points)), key=lambda i: points[i])
    ranks = [0] * len(points)
    for r, i in enumerate(order):
        ranks[i] = r
    return ranks


@dataclass(frozen=True)
class IntervalModel:
    """Closed intervals on the line, one per vertex."""

    items: tuple[tuple[float, float], ...]
    colors: tuple[str, ...]
    ranks: tuple[tuple[int, int], ...] = field(init=False, repr=False)

    def __post_init__(self):
        items = tuple((float(l), float(r)) for l, r in self.items)
        object.__setattr__(self, "items", items)
        object.__setattr__(self, "colors", tuple(self.colors))
        if len(items) != len(self.colors):
            raise ValueError("items and colors length mismatch")
        _check_colors(self.colors)
        for l, r in items:
            if not l < r:
                raise ValueError(f"degenerate interval [{l}, {r}]")
        flat = []
        for i, (l, r) in enumerate(items):
            flat.append((l, i))
            flat.append((r, i))
        ranks = _rank_endpoints(flat)
        object.__setattr__(
            self,
            "ranks",
            tuple((ranks[2 * i], ranks[2 * i + 1]) for i in range(len(items))),
        )

    @property
    def n(self) -> int:
        return len(self.items)

    def to_json(self) -> dict:
        return {
            "type": "interval",
            "items": [
                {"l": l, "r": r, "color": c}
                for (l, r), c in zip(self.items, self.colors)
            ],
        }


@dataclass(frozen=True)
class CircularArcModel:
    """Arcs on a circle, given as (clockwise start, length) in turn units."""

    arcs: tuple[tuple[float, float], ...]
    colors: tuple[str, ...]
    # canonical clockwise endpoints (l, r) on a circle of circumference 2n
    ranks: tuple[tuple[int, int], ...] = field(init=False, repr=False)

    def __post_init__(self):
        arcs = tuple((float(s), float(ln)) for s, ln in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "colors", tuple(self.colors))
        if len(arcs) != len(self.colors):
            raise ValueError("arcs and colors length mismatch")
        _check_colors(self.colors)
        flat = []
        for i, (s, ln) in enumerate(arcs):
            if not 0.0 <= s < 1.0:
                raise ValueError(f"arc start {s} outside [0, 1)")
            if not 0.0 < ln < 1.0:
                raise ValueError(f"degenerate arc length {ln}")
            flat.append((s, i))
            flat.append(((s + ln) % 1.0, i))
        ranks = _rank_endpoints(flat)
        object.__setattr__(
            self,
            "ranks",
            tuple((ranks[2 * i], ranks[2 * i + 1]) for i in range(len(arcs))),
        )

    @property
    def n(self) -> int:
        return len(self.arcs)

    @property
    def circumference(self) -> int:
        return 2 * len(self.arcs)

    def to_json(self) -> dict:
        return {
            "type": "arc",
            "items": [
                {"start": s, "length": ln, "color": c}
                for (s, ln), c in zip(self.arcs, self.colors)
            ],
        }


@dataclass(frozen=True)
class PermutationModel:
    """Crossing segments between two parallel lines.

    Vertex u runs from position top[u] on the upper line to bottom[u] on the
    lower line; both position sequences are permutations of 1..n.
    """

    top: tuple[int, ...]
    bottom: tuple[int, ...]
    colors: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(int(x) for x in self.top))
        object.__setattr__(self, "bottom", tuple(int(x) for x in self.bottom))
        object.__setattr__(self, "colors", tuple(self.colors))
        n = len(self.colors)
        if len(self.top) != n or len(self.bottom) != n:
            raise ValueError("top/bottom/colors length mismatch")
        _check_colors(self.colors)
        want = set(range(1, n + 1))
        if set(self.top) != want or set(self.bottom) != want:
            raise ValueError("top and bottom must both be permutations of 1..n")

    @property
    def n(self) -> int:
        return len(self.colors)

    def to_json(self) -> dict:
        return {
            "type": "permutation",
            "items": [
                {"top": t, "bottom": b, "color": c}
                for t, b, c in zip(self.top, self.bottom, self.colors)
            ],
        }


POINT_SHAPES = ("unit_disk", "unit_square", "grid")


@dataclass(frozen=True)
class PointSetModel:
    """Colored points in the plane plus the intersection shape they carry."""

    points: tuple[tuple[float, float], ...]
    colors: tuple[str, ...]
    shape_kind: str

    def __post_init__(self):
        object.__setattr__(self, "points", tuple((p[0], p[1]) for p in self.points))
        object.__setattr__(self, "colors", tuple(self.colors))
        if len(self.points) != len(self.colors):
            raise ValueError("points and colors length mismatch")
        _check_colors(self.colors)
        if self.shape_kind not in POINT_SHAPES:
            raise ValueError(f"unknown shape_kind {self.shape_kind!r}")
        if len(set(self.points)) != len(self.points):
            raise ValueError("duplicate points")

    @property
    def n(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {
            "type": "points",
            "shape": self.shape_kind,
            "items": [
                {"x": x, "y": y, "color": c}
                for (x, y), c in zip(self.points, self.colors)
            ],
        }


# ---------------------------------------------------------------------------
# compilation to intersection graphs
# ---------------------------------------------------------------------------


def interval_graph(m: IntervalModel) -> BicoloredGraph:
    """Edge iff the (canonicalized) closed intervals overlap."""
    n = m.n
    edges = []
    ranks = m.ranks
    for u in range(n):
        lu, ru = ranks[u]
        for v in range(u + 1, n):
            lv, rv = ranks[v]
            if lu < rv and lv < ru:
                edges.append((u, v))
    return BicoloredGraph(m.colors, edges)


def arc_contains(point: float, arc: tuple[int, int], circ: int) -> bool:
    """Whether a circle position lies on the closed clockwise arc."""
    l, r = arc
    return (point - l) % circ <= (r - l) % circ


def arcs_intersect(a: tuple[int, int], b: tuple[int, int], circ: int) -> bool:
    # two closed arcs meet iff either one contains the other's start
    return arc_contains(b[0], a, circ) or arc_contains(a[0], b, circ)


def circular_arc_graph(m: CircularArcModel) -> BicoloredGraph:
    """Edge iff the arcs share a point of the circle."""
    n = m.n
    circ = m.circumference
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if arcs_intersect(m.ranks[u], m.ranks[v], circ):
                edges.append((u, v))
    return BicoloredGraph(m.colors, edges)


def arcs_cover_circle(m: CircularArcModel) -> bool:
    """True iff the union of all arcs is the entire circle."""
    if m.n == 0:
        return False
    circ = m.circumference
    segments = []
    for l, r in m.ranks:
        if l < r:
            segments.append((l, r))
        else:  # wraps through position 0
            segments.append((l, circ))
            segments.append((0, r))
    segments.sort()
    if segments[0][0] > 0:
        return False
    reach = 0
    for s, e in segments:
        if s > reach:
            return False
        reach = max(reach, e)
    return reach >= circ


def uncovered_point(m: CircularArcModel) -> float | None:
    """Some circle position not covered by any arc, or None if covered."""
    circ = m.circumference
    if m.n == 0:
        return 0.0
    segments = []
    for l, r in m.ranks:
        if l < r:
            segments.append((l, r))
        else:
            segments.append((l, circ))
            segments.append((0, r))
    segments.sort()
    reach = 0
    for s, e in segments:
        if s > reach:
            return reach + 0.5
        reach = max(reach, e)
    if reach < circ:
        return reach + 0.5
    return None


def linearize_arcs(m: CircularArcModel, cut: float, members: Sequence[int]):
    """Cut the circle at ``cut`` and unroll the member arcs onto a line.

    The cut position must avoid every member arc.  Returns an IntervalModel
    over the members (in the given order) on canonical rank coordinates.
    """
    circ = m.circumference
    base = int(cut) + 1  # cut sits strictly between rank base-1 and base
    items = []
    colors = []
    for v in members:
        l, r = m.ranks[v]
        if arc_contains(cut, (l, r), circ):
            raise ValueError(f"cut {cut} lies on arc {v}")
        items.append(((l - base) % circ, (r - base) % circ))
        colors.append(m.colors[v])
    return IntervalModel(tuple(items), tuple(colors))


def permutation_graph(m: PermutationModel) -> BicoloredGraph:
    """Edge iff the two segments cross: opposite order on the two lines."""
    n = m.n
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if (m.top[u] - m.top[v]) * (m.bottom[u] - m.bottom[v]) < 0:
                edges.append((u, v))
    return BicoloredGraph(m.colors, edges)


def unit_disk_graph(m: PointSetModel) -> BicoloredGraph:
    """Edge iff Euclidean distance <= 1 (radius-1/2 disks, tangency counts)."""
    if m.shape_kind != "unit_disk":
        raise ValueError(f"expected unit_disk model, got {m.shape_kind}")
    edges = []
    pts = m.points
    for u in range(m.n):
        xu, yu = pts[u]
        for v in range(u + 1, m.n):
            xv, yv = pts[v]
            if (xu - xv) ** 2 + (yu - yv) ** 2 <= 1:
                edges.append((u, v))
    return BicoloredGraph(m.colors, edges)


def unit_square_graph(m: PointSetModel) -> BicoloredGraph:
    """Edge iff L1 distance <= 1.

    The squares are diamonds of diagonal 1 centered at the points (axis
    parallel unit squares after rotating the whole construction back and
    scaling); two such diamonds meet exactly when the L1 distance of their
    centers is at most 1, so axis neighbors at distance 1 touch and diagonal
    neighbors do not.
    """
    if m.shape_kind != "unit_square":
        raise ValueError(f"expected unit_square model, got {m.shape_kind}")
    edges = []
    pts = m.points
    for u in range(m.n):
        xu, yu = pts[u]
        for v in range(u + 1, m.n):
            xv, yv = pts[v]
            if abs(xu - xv) + abs(yu - yv) <= 1:
                edges.append((u, v))
    return BicoloredGraph(m.colors, edges)


def grid_graph(m: PointSetModel) -> BicoloredGraph:
    """Edge iff the integer points differ by 1 in exactly one coordinate."""
    if m.shape_kind != "grid":
        raise ValueError(f"expected grid model, got {m.shape_kind}")
    pts = []
    for x, y in m.points:
        if x != int(x) or y != int(y):
            raise ValueError(f"non-integer grid coordinate ({x}, {y})")
        pts.append((int(x), int(y)))
    index = {p: i for i, p in enumerate(pts)}
    edges = []
    for i, (x, y) in enumerate(pts):
        for q in ((x + 1, y), (x, y + 1)):
            j = index.get(q)
            if j is not None:
                edges.append((i, j))
    return BicoloredGraph(m.colors, edges)


def compile_model(m) -> BicoloredGraph:
    """Compile any geometric model to its intersection graph."""
    if isinstance(m, IntervalModel):
        return interval_graph(m)
    if isinstance(m, CircularArcModel):
        return circular_arc_graph(m)
    if isinstance(m, PermutationModel):
        return permutation_graph(m)
    if isinstance(m, PointSetModel):
        if m.shape_kind == "unit_disk":
            return unit_disk_graph(m)
        if m.shape_kind == "unit_square":
            return unit_square_graph(m)
        return grid_graph(m)
    raise TypeError(f"not a geometric model: {m!r}")


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------


def parse_model(obj: dict):
    """Parse a model from its JSON object form (see each model's to_json)."""
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValueError("model JSON must be an object with a 'type' field")
    kind = obj["type"]
    items = obj.get("items")
    if not isinstance(items, list):
        raise ValueError("model JSON missing 'items' list")
    if kind == "interval":
        return IntervalModel(
            tuple((it["l"], it["r"]) for it in items),
            tuple(it["color"] for it in items),
        )
    if kind == "arc":
        return CircularArcModel(
            tuple((it["start"], it["length"]) for it in items),
            tuple(it["color"] for it in items),
        )
    if kind == "permutation":
        return PermutationModel(
            tuple(it["top"] for it in items),
            tuple(it["bottom"] for it in items),
            tuple(it["color"] for it in items),
        )
    if kind == "points":
        return PointSetModel(
            tuple((it["x"], it["y"]) for it in items),
            tuple(it["color"] for it in items),
            obj.get("shape", "unit_disk"),
        )
    raise ValueError(f"unknown model type {kind!r}")
