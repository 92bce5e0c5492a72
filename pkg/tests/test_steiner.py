import itertools
import random

import pytest

from bcs.generators import random_interval_model, random_permutation_model
from bcs.graph import RED, BLUE, BicoloredGraph, is_connected, connected_components
from bcs.models import IntervalModel, PermutationModel, interval_graph, permutation_graph
from bcs.oracle import CapacityError
from bcs.steiner import (
    DisconnectedSubstrateError,
    select_steiners_interval,
    steiner_exact_oracle,
    steiner_intervals,
    steiner_permutation,
    steiner_size_dp,
)


def grid4():
    pts = [(x, y) for x in range(4) for y in range(4)]
    index = {p: i for i, p in enumerate(pts)}
    edges = []
    for (x, y), i in index.items():
        for q in ((x + 1, y), (x, y + 1)):
            if q in index:
                edges.append((i, index[q]))
    g = BicoloredGraph([RED] * 16, edges)
    return g, index


class TestIntervalGreedy:
    def test_unique_connector(self):
        m = IntervalModel(((0, 1), (1.5, 3), (0.5, 2)), (BLUE, BLUE, RED))
        g = interval_graph(m)
        res = select_steiners_interval(m, g, [0, 1])
        assert res.steiner_vertices == (2,)

    def test_already_connected(self):
        m = IntervalModel(((0, 2), (1, 3)), (BLUE, BLUE))
        g = interval_graph(m)
        assert select_steiners_interval(m, g, [0, 1]).steiner_vertices == ()

    def test_single_terminal(self):
        m = IntervalModel(((0, 2), (1, 3)), (BLUE, RED))
        g = interval_graph(m)
        assert select_steiners_interval(m, g, [0]).steiner_vertices == ()

    def test_three_gap_chain(self):
        m = IntervalModel(
            ((0, 1), (2, 3), (4, 5), (0.5, 2.5), (2.4, 4.5), (0.9, 1.1)),
            (BLUE,) * 3 + (RED,) * 3,
        )
        g = interval_graph(m)
        res = select_steiners_interval(m, g, [0, 1, 2])
        assert set(res.steiner_vertices) == {3, 4}
        # exhaustive minimum over all pool subsets agrees
        best = None
        for size in range(0, 4):
            for combo in itertools.combinations([3, 4, 5], size):
                if is_connected(g, [0, 1, 2, *combo]):
                    best = size
                    break
            if best is not None:
                break
        assert best == len(res.steiner_vertices)

    def test_disconnected_substrate_raises(self):
        intervals = ((0, 1), (2, 3))
        with pytest.raises(DisconnectedSubstrateError):
            steiner_intervals(intervals, [0, 1], [])

    def test_minimality_random(self):
        rng = random.Random(21)
        done = 0
        while done < 120:
            n = rng.randrange(2, 13)
            m = random_interval_model(n, rng)
            g = interval_graph(m)
            if not is_connected(g, range(n)):
                continue
            terms = rng.sample(range(n), rng.randrange(1, n + 1))
            res = select_steiners_interval(m, g, terms)
            assert is_connected(g, list(terms) + list(res.steiner_vertices))
            exact = steiner_exact_oracle(g, terms)
            assert len(res.steiner_vertices) == len(exact.steiner_vertices)
            done += 1

    def test_progress_invariants(self):
        # the greedy never increases the component count of terminals plus
        # chosen, and the reach of the first component strictly grows
        rng = random.Random(22)
        done = 0
        while done < 60:
            n = rng.randrange(3, 12)
            m = random_interval_model(n, rng)
            g = interval_graph(m)
            if not is_connected(g, range(n)):
                continue
            terms = sorted(rng.sample(range(n), rng.randrange(2, n + 1)))
            pool = [v for v in range(n) if v not in set(terms)]
            picks = steiner_intervals(m.ranks, terms, pool)  # greedy order
            chosen = []
            prev_comps = len(connected_components(g, terms))
            for v in picks:
                chosen.append(v)
                comps = len(connected_components(g, list(terms) + chosen))
                assert comps <= prev_comps
                prev_comps = comps
            done += 1


class TestPermutationSteiner:
    def test_adjacent_terminals(self):
        m = PermutationModel((1, 2), (2, 1), (BLUE, BLUE))
        g = permutation_graph(m)
        assert steiner_permutation(m, g, [0, 1]).steiner_vertices == ()

    def test_unique_common_neighbor(self):
        m = PermutationModel((1, 2, 3), (2, 3, 1), (BLUE, RED, BLUE))
        g = permutation_graph(m)
        assert g.edges == ((0, 2), (1, 2))
        res = steiner_permutation(m, g, [0, 1])
        assert res.steiner_vertices == (2,)

    def test_disconnected_graph_rejected(self):
        m = PermutationModel((1, 2), (1, 2), (BLUE, BLUE))
        g = permutation_graph(m)
        with pytest.raises(ValueError):
            steiner_permutation(m, g, [0])

    def test_minimality_random(self):
        rng = random.Random(23)
        done = 0
        while done < 150:
            n = rng.randrange(2, 11)
            m = random_permutation_model(n, rng)
            g = permutation_graph(m)
            if not is_connected(g, range(n)):
                continue
            terms = rng.sample(range(n), rng.randrange(1, n + 1))
            res = steiner_permutation(m, g, terms)
            assert is_connected(g, list(terms) + list(res.steiner_vertices))
            exact = steiner_exact_oracle(g, terms)
            assert len(res.steiner_vertices) == len(exact.steiner_vertices)
            done += 1


class TestExactOracles:
    def test_all_vertices_terminal(self):
        g = BicoloredGraph([RED, BLUE], [(0, 1)])
        assert steiner_exact_oracle(g, [0, 1]).steiner_vertices == ()

    def test_path_middle(self):
        g = BicoloredGraph([RED, BLUE, RED], [(0, 1), (1, 2)])
        assert steiner_exact_oracle(g, [0, 2]).steiner_vertices == (1,)

    def test_grid_corners_two_oracles_agree(self):
        g, index = grid4()
        terms = [index[(0, 0)], index[(3, 0)], index[(0, 3)]]
        subset = steiner_exact_oracle(g, terms)
        dp = steiner_size_dp(g, terms)
        assert len(subset.steiner_vertices) == dp == 4

    def test_dp_matches_subset_search_random(self):
        rng = random.Random(24)
        from bcs.generators import random_connected_graph

        for _ in range(40):
            n = rng.randrange(2, 10)
            g = random_connected_graph(n, rng)
            terms = rng.sample(range(n), rng.randrange(1, min(n, 6) + 1))
            a = steiner_exact_oracle(g, terms)
            b = steiner_size_dp(g, terms)
            assert len(a.steiner_vertices) == b

    def test_capacity_guardrail(self):
        g = BicoloredGraph([RED] * 19, [(i, i + 1) for i in range(18)])
        with pytest.raises(CapacityError):
            steiner_exact_oracle(g, [0, 18])
