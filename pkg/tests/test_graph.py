import pytest
from hypothesis import given, settings, strategies as st

from copthrottle import families
from copthrottle.graph import (
    BudgetExceeded,
    CornerWitness,
    Graph,
    boundary_vertices,
    corners,
    distances_from,
    distances_from_set,
    domination_number,
    feedback_vertex_number,
    geodesic_between,
    is_geodesic,
    is_outerplanar,
    k_distance_dominating,
    k_radius_exact,
    max_distance,
)

from oracles import brute_domination, brute_rad_k, BIG


def graphs(max_n=8):
    """Hypothesis strategy: a random simple graph as (n, edge subset)."""
    return st.integers(2, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.sets(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).map(
                    lambda p: (min(p), max(p))
                ).filter(lambda p: p[0] != p[1])
            ),
        )
    ).map(lambda t: Graph(t[0], t[1]))


class TestGraphBasics:
    def test_validation(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(-1)

    def test_adjacency_symmetric_and_sorted(self):
        g = Graph(4, [(2, 0), (0, 1), (3, 1)])
        assert g.adj[0] == (1, 2)
        assert g.adj[2] == (0,)
        assert all(u in g.nbr[v] for u in range(4) for v in g.adj[u])

    def test_induced_relabel(self):
        g = families.path(5)
        sub, old = g.induced([1, 2, 4])
        assert old == (1, 2, 4)
        assert sub.edges() == ((0, 1),)

    def test_components(self):
        g = Graph(5, [(0, 1), (3, 4)])
        assert g.components() == [[0, 1], [2], [3, 4]]
        assert not g.is_connected()
        assert g.is_forest()


class TestDistances:
    def test_path_single_source(self):
        assert distances_from_set(families.path(3), {0}) == [0, 1, 2]

    def test_p9_two_sources_hand_bfs(self):
        # hand BFS on the 9-path from {2, 6}
        assert distances_from_set(families.path(9), {2, 6}) == [2, 1, 0, 1, 2, 1, 0, 1, 2]
        assert max_distance(families.path(9), {2, 6}) == 2

    def test_unreachable_is_none(self):
        g = families.empty(2)
        assert distances_from_set(g, {0}) == [0, None]

    def test_errors(self):
        g = families.path(3)
        with pytest.raises(ValueError):
            distances_from_set(g, set())
        with pytest.raises(ValueError):
            distances_from_set(g, {7})

    @settings(max_examples=40, deadline=None)
    @given(graphs())
    def test_edge_lipschitz(self, g):
        src = {0}
        dist = distances_from_set(g, src)
        for u, v in g.edges():
            if dist[u] is not None and dist[v] is not None:
                assert abs(dist[u] - dist[v]) <= 1


class TestKRadius:
    def test_p9_center(self):
        assert k_radius_exact(families.path(9), 1) == (4, (4,))

    def test_p9_two(self):
        value, witness = k_radius_exact(families.path(9), 2)
        assert value == 2
        assert brute_rad_k(families.path(9), 2) == 2

    def test_c5_two(self):
        value, _ = k_radius_exact(families.cycle(5), 2)
        assert value == 1
        assert brute_rad_k(families.cycle(5), 2) == 1

    def test_disconnected_unreachable(self):
        assert k_radius_exact(families.empty(3), 2) == (None, ())

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            k_radius_exact(families.path(40), 10, budget=1000)

    @settings(max_examples=25, deadline=None)
    @given(graphs(max_n=6), st.integers(1, 3))
    def test_matches_bruteforce_and_monotone(self, g, k):
        k = min(k, g.n)
        value, witness = k_radius_exact(g, k)
        expect = brute_rad_k(g, k)
        assert (expect if expect < BIG else None) == value
        if value is not None and k < g.n:
            nxt, _ = k_radius_exact(g, k + 1)
            assert nxt is not None and nxt <= value

    def test_rad_n_is_zero(self):
        g = families.cycle(5)
        assert k_radius_exact(g, g.n)[0] == 0


class TestDomination:
    def test_greedy_respects_meir_moon(self):
        s = k_distance_dominating(families.path(9), 2, mode="greedy")
        assert len(s) <= 3
        assert all(d <= 2 for d in distances_from_set(families.path(9), s))

    def test_exact_clique(self):
        assert k_distance_dominating(families.complete(5), 1, mode="exact") == (0,)

    def test_exact_p9_lex_least(self):
        assert k_distance_dominating(families.path(9), 1, mode="exact") == (1, 4, 7)
        assert brute_domination(families.path(9), 1)[0] == 3

    def test_greedy_needs_connected(self):
        with pytest.raises(ValueError):
            k_distance_dominating(families.empty(3), 1, mode="greedy")

    def test_milp_matches_enumeration(self):
        for seed in range(8):
            g = families.random_connected(8, seed)
            enum_size, _ = domination_number(g, method="enumerate")
            milp_size, milp_wit = domination_number(g, method="milp")
            assert enum_size == milp_size
            assert all(
                d is not None and d <= 1
                for d in distances_from_set(g, milp_wit)
            )

    @settings(max_examples=20, deadline=None)
    @given(st.integers(4, 30), st.integers(1, 3), st.integers(0, 10**6))
    def test_greedy_bound_on_random_trees(self, n, k, seed):
        g = families.random_tree(n, seed)
        if n < k + 1:
            return
        s = k_distance_dominating(g, k, mode="greedy")
        assert len(s) <= n // (k + 1)
        assert all(d is not None and d <= k for d in distances_from_set(g, s))


class TestCorners:
    def test_p3(self):
        assert corners(families.path(3)) == [CornerWitness(0, 1), CornerWitness(2, 1)]

    def test_c4_empty(self):
        assert corners(families.cycle(4)) == []

    def test_k4_all_pairs(self):
        assert len(corners(families.complete(4))) == 12

    @settings(max_examples=30, deadline=None)
    @given(graphs())
    def test_witnesses_verify(self, g):
        for w in corners(g):
            assert (g.nbr[w.corner] | {w.corner}) <= (g.nbr[w.dominator] | {w.dominator})


class TestBoundary:
    def test_p5(self):
        assert boundary_vertices(families.path(5), 2) == (0, 4)

    def test_k4(self):
        assert boundary_vertices(families.complete(4), 0) == (1, 2, 3)

    def test_c6_antipode(self):
        assert boundary_vertices(families.cycle(6), 0) == (3,)


class TestGeodesic:
    def test_unique_path(self):
        assert geodesic_between(families.path(5), 0, 4) == [0, 1, 2, 3, 4]

    def test_c6_lowest_id_tiebreak(self):
        assert geodesic_between(families.cycle(6), 0, 3) == [0, 1, 2, 3]

    def test_edge(self):
        assert geodesic_between(families.complete(3), 0, 1) == [0, 1]

    def test_disconnected_error(self):
        with pytest.raises(ValueError):
            geodesic_between(families.empty(2), 0, 1)

    @settings(max_examples=30, deadline=None)
    @given(graphs())
    def test_length_matches_bfs(self, g):
        dist = distances_from(g, 0)
        for v in range(g.n):
            if dist[v] is None:
                continue
            p = geodesic_between(g, 0, v)
            assert len(p) - 1 == dist[v]
            assert is_geodesic(g, p)


class TestFeedback:
    def test_tree_zero(self):
        assert feedback_vertex_number(families.random_tree(8, 0)) == (0, ())

    def test_c5_one(self):
        f, w = feedback_vertex_number(families.cycle(5))
        assert f == 1 and w == (0,)

    def test_k4_two(self):
        # removing one vertex leaves K3 (a cycle); removing two leaves K2
        f, _ = feedback_vertex_number(families.complete(4))
        assert f == 2

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            feedback_vertex_number(families.complete(9), budget=10)


class TestOuterplanar:
    def test_forbidden_minors_themselves(self):
        assert not is_outerplanar(families.complete(4))
        assert not is_outerplanar(families.complete_bipartite(2, 3))

    def test_cycles_and_trees(self):
        assert is_outerplanar(families.cycle(5))
        assert is_outerplanar(families.random_tree(9, 4))

    def test_fan_and_wheel(self):
        # fan = path + apex is outerplanar; wheel = cycle + apex is not
        p = families.path(5)
        fan = Graph(6, list(p.edges()) + [(5, i) for i in range(5)])
        assert is_outerplanar(fan)
        c = families.cycle(5)
        wheel = Graph(6, list(c.edges()) + [(5, i) for i in range(5)])
        assert not is_outerplanar(wheel)

    def test_k4_subdivision_detected(self):
        # subdivide one edge of K4: still has a K4 minor
        g = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)])
        assert not is_outerplanar(g)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            is_outerplanar(families.grid(3, 4), budget=5)
