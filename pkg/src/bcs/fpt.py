"""Fixed-parameter search for balanced connected subgraphs of a given size.

Color coding: a family of vertex labelings is drawn so that any target vertex
set of size k receives k distinct labels under at least one labeling.  For a
fixed labeling, a table over (vertex, label set, color budget) records which
colorful connected subsets exist; entries are filled in increasing label-set
size by combining neighbor entries with disjoint labels.  Budgets are packed
into machine-word bitmasks (bit b of an entry word means "b blue vertices"),
so combining two entries is a tiny shift-or convolution.

Labels are 0-based integers below k and label sets are bitmasks.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .graph import BLUE, BicoloredGraph, Solution, empty_solution, make_solution, validate_solution
from .oracle import CapacityError

MAX_K = 20
EXHAUSTIVE_CAP = 1000


@dataclass(frozen=True)
class HashFamily:
    functions: tuple[tuple[int, ...], ...]
    mode: str  # "randomized" | "exhaustive"
    delta: float | None = None


def _subset_family(n: int, k: int) -> list[tuple[int, ...]]:
    """One dedicated labeling per k-subset: injective on it by construction."""
    fns = []
    for combo in itertools.combinations(range(n), k):
        f = [0] * n
        for i, v in enumerate(combo):
            f[v] = i
        fns.append(tuple(f))
    return fns


def build_hash_family(
    n: int,
    k: int,
    delta: float | None = None,
    mode: str = "randomized",
    seed: int | None = None,
    exhaustive_cap: int = EXHAUSTIVE_CAP,
) -> HashFamily:
    """Construct a labeling family for the color-coding search.

    randomized: ceil(e^k * ln(1/delta)) independent uniform labelings; a fixed
    k-subset is labeled injectively by one of them with probability >= 1-delta
    since a single trial succeeds with probability k!/k^k >= e^-k.

    exhaustive: a deterministic family injective on every k-subset; all k^n
    labelings when that is at most ``exhaustive_cap``, otherwise one dedicated
    labeling per k-subset (still perfect, far smaller at awkward sizes).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > n:
        raise ValueError(f"k={k} exceeds vertex count {n}")
    if mode == "randomized":
        if delta is None or not 0 < delta < 1:
            raise ValueError("randomized mode needs a failure bound 0 < delta < 1")
        count = math.ceil(math.e**k * math.log(1.0 / delta))
        rng = random.Random(seed)
        fns = tuple(
            tuple(rng.randrange(k) for _ in range(n)) for _ in range(count)
        )
        return HashFamily(fns, "randomized", delta)
    if mode == "exhaustive":
        if k**n <= exhaustive_cap:
            fns = tuple(itertools.product(range(k), repeat=n))
        else:
            fns = tuple(_subset_family(n, k))
        return HashFamily(fns, "exhaustive", None)
    raise ValueError(f"unknown hash family mode {mode!r}")


class DPTable:
    """Bit table M[v; L; (b, r)] for one labeling.

    words[v][L] packs all budgets for the label set L: bit b is set iff some
    connected vertex set containing v realizes the labels L injectively with
    exactly b blue and |L|-b red vertices.
    """

    def __init__(self, g: BicoloredGraph, labels: tuple[int, ...], k: int):
        self.g = g
        self.labels = labels
        self.k = k
        self.words = [[0] * (1 << k) for _ in range(g.n)]

    def get(self, v: int, label_set: int, b: int, r: int) -> int:
        if b < 0 or r < 0 or b + r != bin(label_set).count("1"):
            return 0
        return (self.words[v][label_set] >> b) & 1

    def entry_count(self) -> int:
        return sum(
            1 for row in self.words for w in row if w
        )


def _convolve(x: int, y: int) -> int:
    """OR of y shifted by every set bit position of x (budget addition)."""
    z = 0
    while x:
        low = x & -x
        z |= y << (low.bit_length() - 1)
        x ^= low
    return z


def fill_table(g: BicoloredGraph, f: tuple[int, ...], k: int, max_k: int = MAX_K) -> DPTable:
    """Fill the whole table for one labeling, label sets by increasing size."""
    if k > max_k:
        raise CapacityError(f"k={k} exceeds table guardrail {max_k}")
    if len(f) != g.n:
        raise ValueError("labeling length must equal vertex count")
    n = g.n
    table = DPTable(g, tuple(f), k)
    words = table.words
    # neighbor aggregates: agg[v][mask] = OR of words[u][mask] over u ~ v
    agg = [[0] * (1 << k) for _ in range(n)]
    masks_by_size = [[] for _ in range(k + 1)]
    for mask in range(1, 1 << k):
        masks_by_size[bin(mask).count("1")].append(mask)

    for v in range(n):
        bit = 1 if g.colors[v] == BLUE else 0
        words[v][1 << f[v]] = 1 << bit
    for mask in masks_by_size[1]:
        for v in range(n):
            w = 0
            for u in g.adj[v]:
                w |= words[u][mask]
            agg[v][mask] = w

    for t in range(2, k + 1):
        for mask in masks_by_size[t]:
            for v in range(n):
                fbit = 1 << f[v]
                if not mask & fbit:
                    continue
                sub = mask ^ fbit
                acc = 0
                avn = agg[v]
                wvn = words[v]
                s = sub
                while s:
                    a = avn[s]
                    if a:
                        y = wvn[mask ^ s]
                        if y:
                            acc |= _convolve(a, y)
                    s = (s - 1) & sub
                if acc:
                    wvn[mask] = acc
        if t < k:
            for mask in masks_by_size[t]:
                for v in range(n):
                    w = 0
                    for u in g.adj[v]:
                        w |= words[u][mask]
                    if w:
                        agg[v][mask] = w
    return table


def batch_procedure(
    g: BicoloredGraph,
    f: tuple[int, ...],
    v: int,
    label_set: int,
    budget: tuple[int, int],
    m: DPTable,
) -> int:
    """Compute one table bit from the smaller-label entries of ``m``.

    Initialize collects the (label subset, budget) pairs realizable at a
    neighbor of v; Update closes them under disjoint-label union with summed
    budgets; Decide checks whether the full remainder with the residual budget
    was reached.  The closure is evaluated as a partition dynamics over
    submasks (anchored at the lowest set bit so each partition is counted
    once), which reaches the same fixpoint as a worklist.
    """
    b, r = budget
    fbit = 1 << f[v]
    if not label_set & fbit:
        raise ValueError("label of v must belong to the label set")
    size = bin(label_set).count("1")
    if b < 0 or r < 0 or b + r != size:
        raise ValueError("budget must be non-negative and sum to |L|")
    if g.colors[v] == BLUE:
        residual = (b - 1, r)
    else:
        residual = (b, r - 1)
    if residual[0] < 0 or residual[1] < 0:
        return 0
    sub_full = label_set ^ fbit
    # initialize: budget words reachable at some neighbor, per label subset
    init = {}
    for s in _submasks(sub_full):
        w = 0
        for u in g.adj[v]:
            w |= m.words[u][s]
        if w:
            init[s] = w
    # update: partitions of each subset into initialized parts
    part = {0: 1}  # empty set realizes the zero budget
    order = sorted(_submasks(sub_full), key=lambda s: (bin(s).count("1"), s))
    for s in order:
        low = s & -s
        acc = 0
        piece = s
        while piece:
            if piece & low:
                base = init.get(piece)
                if base:
                    rest = part.get(s ^ piece)
                    if rest:
                        acc |= _convolve(base, rest)
            piece = (piece - 1) & s
        if acc:
            part[s] = acc
    word = part.get(sub_full, 0)
    return (word >> residual[0]) & 1


def _submasks(mask: int):
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def _reconstruct(table: DPTable, v: int, mask: int, b: int) -> set[int]:
    """Recover one witness vertex set for a set table bit."""
    g = table.g
    f = table.labels
    fbit = 1 << f[v]
    if mask == fbit:
        return {v}
    sub = mask ^ fbit
    vb = 1 if g.colors[v] == BLUE else 0
    s = sub
    while s:
        for u in g.adj[v]:
            wu = table.words[u][s]
            if not wu:
                continue
            rest = table.words[v][mask ^ s]
            if not rest:
                continue
            for b1 in range(bin(s).count("1") + 1):
                if (wu >> b1) & 1 and b - b1 >= 0 and (rest >> (b - b1)) & 1:
                    return _reconstruct(table, u, s, b1) | _reconstruct(
                        table, v, mask ^ s, b - b1
                    )
        s = (s - 1) & sub
    raise AssertionError("set table bit without a derivation")


def k_bcs(
    g: BicoloredGraph,
    k: int,
    delta: float = 0.01,
    exhaustive: bool = False,
    seed: int | None = None,
) -> tuple[bool, Solution | None]:
    """Decide whether a balanced connected subgraph of size k exists.

    A "yes" always ships a verified witness.  With a randomized family a "no"
    is wrong with probability at most delta; with the exhaustive family it is
    exact.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    if k % 2 or k > g.n:
        return False, None
    if k // 2 > min(g.red_total, g.blue_total):
        return False, None
    mode = "exhaustive" if exhaustive else "randomized"
    family = build_hash_family(g.n, k, delta=None if exhaustive else delta,
                               mode=mode, seed=seed)
    full = (1 << k) - 1
    half = k // 2
    for f in family.functions:
        table = fill_table(g, f, k)
        for v in range(g.n):
            if (table.words[v][full] >> half) & 1:
                witness = _reconstruct(table, v, full, half)
                sol = make_solution(g, witness, "fpt")
                assert sol.size == k and validate_solution(g, sol)
                return True, sol
    return False, None


def max_bcs_fpt(
    g: BicoloredGraph,
    k_max: int | None = None,
    delta: float = 0.01,
    exhaustive: bool = False,
    seed: int | None = None,
) -> Solution:
    """Largest even k with a positive answer, with witness."""
    cap = 2 * min(g.red_total, g.blue_total)
    if k_max is None:
        k_max = g.n
    if k_max > g.n:
        raise ValueError("k_max exceeds vertex count")
    top = min(k_max, cap)
    top -= top % 2
    for k in range(top, 0, -2):
        yes, sol = k_bcs(g, k, delta=delta, exhaustive=exhaustive, seed=seed)
        if yes:
            return sol
    return empty_solution("fpt")
