import random

import pytest

from bcs.graph import (
    BLUE,
    RED,
    BicoloredGraph,
    Solution,
    connected_components,
    empty_solution,
    induced_subgraph,
    is_balanced,
    is_connected,
    make_solution,
    validate_solution,
)


def triangle():
    return BicoloredGraph([RED, BLUE, RED], [(0, 1), (1, 2), (0, 2)])


def path3():
    return BicoloredGraph([RED, BLUE, RED], [(0, 1), (1, 2)])


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            BicoloredGraph([RED, BLUE], [(0, 0)])

    def test_rejects_bad_color(self):
        with pytest.raises(ValueError):
            BicoloredGraph(["green"], [])

    def test_rejects_out_of_range_edge(self):
        with pytest.raises(ValueError):
            BicoloredGraph([RED, BLUE], [(0, 2)])

    def test_adjacency_symmetric(self):
        g = path3()
        for u in range(g.n):
            for v in g.adj[u]:
                assert u in g.adj[v]

    def test_counts(self):
        g = triangle()
        assert g.red_total == 2 and g.blue_total == 1


class TestJson:
    def test_round_trip(self):
        g = triangle()
        again = BicoloredGraph.from_json(g.to_json())
        assert again.colors == g.colors and again.edges == g.edges

    def test_rejects_duplicate_edge(self):
        obj = {"n": 2, "colors": [RED, BLUE], "edges": [[0, 1], [1, 0]]}
        with pytest.raises(ValueError):
            BicoloredGraph.from_json(obj)

    def test_rejects_self_edge(self):
        obj = {"n": 2, "colors": [RED, BLUE], "edges": [[1, 1]]}
        with pytest.raises(ValueError):
            BicoloredGraph.from_json(obj)

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            BicoloredGraph.from_json({"n": 3, "colors": [RED], "edges": []})


class TestInducedSubgraph:
    def test_identity_triangle(self):
        g = triangle()
        sub, ids = induced_subgraph(g, [0, 1, 2])
        assert sub.n == 3 and len(sub.edges) == 3 and ids == [0, 1, 2]

    def test_nonadjacent_pair(self):
        g = path3()
        sub, _ = induced_subgraph(g, [0, 2])
        assert sub.n == 2 and sub.edges == ()

    def test_clique_heredity(self):
        k4 = BicoloredGraph(
            [RED, BLUE, RED, BLUE],
            [(a, b) for a in range(4) for b in range(a + 1, 4)],
        )
        sub, ids = induced_subgraph(k4, [0, 2, 3])
        assert len(sub.edges) == 3
        assert ids == [0, 2, 3]

    def test_colors_inherited(self):
        g = path3()
        sub, ids = induced_subgraph(g, [2, 1])
        assert sub.colors == (RED, BLUE) and ids == [2, 1]

    def test_invalid_vertex(self):
        with pytest.raises(ValueError):
            induced_subgraph(path3(), [0, 9])


class TestConnectivity:
    def test_path_connected(self):
        assert is_connected(path3(), [0, 1, 2])

    def test_path_endpoints_not_connected(self):
        assert not is_connected(path3(), [0, 2])

    def test_single_vertex(self):
        assert is_connected(path3(), [1])

    def test_empty_is_false(self):
        assert not is_connected(path3(), [])

    def test_agrees_with_component_count(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randrange(1, 9)
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.3
            ]
            g = BicoloredGraph([RED] * n, edges)
            s = [v for v in range(n) if rng.random() < 0.7]
            if not s:
                continue
            assert is_connected(g, s) == (len(connected_components(g, s)) == 1)


class TestBalance:
    def test_empty_balanced(self):
        assert is_balanced(path3(), [])

    def test_pair_balanced(self):
        assert is_balanced(path3(), [0, 1])

    def test_two_red_one_blue(self):
        assert not is_balanced(path3(), [0, 1, 2])


class TestValidateSolution:
    def test_empty_valid(self):
        assert validate_solution(path3(), empty_solution("t"))

    def test_red_blue_edge_valid(self):
        g = path3()
        assert validate_solution(g, make_solution(g, [0, 1], "t"))

    def test_disconnected_pair_invalid(self):
        g = path3()
        sol = make_solution(g, [0, 2], "t")
        assert not validate_solution(g, sol)

    def test_wrong_counts_invalid(self):
        g = path3()
        sol = Solution((0, 1), 2, 0, "t")
        assert not validate_solution(g, sol)

    def test_duplicate_vertices_invalid(self):
        g = path3()
        sol = Solution((0, 0), 1, 1, "t")
        assert not validate_solution(g, sol)
