import pytest
from hypothesis import given, settings, strategies as st

from copthrottle import families
from copthrottle.engine import cop_number
from copthrottle.graph import domination_number, feedback_vertex_number
from copthrottle.chordal import is_chordal

from oracles import brute_domination


class TestBasicFamilies:
    def test_path(self):
        g = families.path(5)
        assert (g.n, g.m) == (5, 4)

    def test_spider(self):
        g = families.spider(3, 2)
        assert g.n == 7 and g.degree(0) == 3
        # exactly one vertex of degree three or more
        assert sum(1 for v in range(g.n) if g.degree(v) >= 3) == 1

    def test_petersen(self):
        g = families.petersen()
        assert g.n == 10 and all(g.degree(v) == 3 for v in range(10))

    def test_heawood(self):
        from copthrottle.graph import Graph, distances_from

        g = families.heawood()
        assert g.n == 14 and g.m == 21
        assert all(g.degree(v) == 3 for v in range(14))
        assert all((u + v) % 2 == 1 for u, v in g.edges())  # bipartite by parity
        # girth 6: shortest cycle through any edge
        def cycle_through(u, v):
            h = Graph(14, [e for e in g.edges() if e != (u, v)])
            return 1 + distances_from(h, u)[v]
        assert min(cycle_through(u, v) for u, v in g.edges()) == 6
        assert cop_number(g) == 3

    def test_grid(self):
        g = families.grid(3, 4)
        assert g.n == 12 and g.m == 17

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            families.cycle(2)
        with pytest.raises(ValueError):
            families.generate_named("nosuch", {})
        with pytest.raises(ValueError):
            families.generate_named("path", {"m": 3})


class TestGenerateNamed:
    def test_dispatch(self):
        assert families.generate_named("path", {"n": 5}) == families.path(5)
        assert families.generate_named("petersen", {}) == families.petersen()
        g = families.generate_named("random_chordal", {"n": 8, "seed": 3})
        assert g == families.random_chordal(8, 3)


class TestMEll:
    def test_orders(self):
        assert families.m_prime(3).n == 13  # 3*3 + 4
        assert families.m_ell(3).n == 26  # 6*3 + 8
        assert families.m_ell(1).n == 14

    def test_structure(self):
        g = families.m_ell(2)
        # exactly one cycle: feedback number 1, and m = n
        assert g.m == g.n
        assert feedback_vertex_number(g)[0] == 1
        # exactly 3l+4 leaves
        leaves = [v for v in range(g.n) if g.degree(v) == 1]
        assert len(leaves) == 3 * 2 + 4

    def test_cop_number_two_small_ell(self):
        assert cop_number(families.m_ell(1)) == 2

    def test_placement_positions(self):
        # one cop per pendant path, at distance ceil((l+3)/2) from the end leaf
        ell = 7
        g = families.m_ell(ell)
        placement = families.m_ell_cop_placement(ell)
        from copthrottle.graph import distances_from

        n_prime = 3 * ell + 4
        for i, cop in enumerate(placement):
            far_end = 4 + (i + 1) * ell - 1
            end_leaf = n_prime + far_end
            assert distances_from(g, cop)[end_leaf] == (ell + 3 + 1) // 2


class TestHFamily:
    def test_order_with_petersen_core(self):
        g = families.h_family(3, 2, families.petersen())
        assert g.n == 1 + 3 * 2 + 3 * 10

    def test_trivial_core(self):
        g = families.h_family(3, 1, families.complete(1))
        # spider with 3 legs of length 2 (core K1 extends each leg by one)
        spider = families.spider(3, 2)
        assert g.n == spider.n and g.m == spider.m

    def test_heawood_core(self):
        g = families.h_family(4, 2, families.heawood())
        assert g.n == 1 + 8 + 4 * 14

    def test_disconnected_core_rejected(self):
        with pytest.raises(ValueError):
            families.h_family(3, 1, families.empty(2))


class TestAttachLeaves:
    def test_k1(self):
        assert families.attach_leaves(families.complete(1)) == families.complete(2)

    def test_c4(self):
        g = families.attach_leaves(families.cycle(4))
        assert (g.n, g.m) == (8, 8)

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10**6), st.integers(2, 6))
    def test_domination_number_equals_base_order(self, seed, n):
        base = families.random_connected(n, seed)
        g = families.attach_leaves(base)
        assert domination_number(g)[0] == n
        assert brute_domination(g)[0] == n


class TestAttachStar:
    def test_order(self):
        g = families.attach_star(families.path(4), 4, [(0, 1)])
        assert g.n == 9

    def test_k1_one_leaf_is_p3(self):
        g = families.attach_star(families.complete(1), 1, [(1, 0)])
        assert g.n == 3 and g.m == 2 and g.is_connected()

    def test_base_graph_stays_induced(self):
        base = families.cycle(5)
        g = families.attach_star(base, 3, [(0, 2), (1, 4)])
        sub, old = g.induced(range(5))
        assert sub.edges() == base.edges()

    def test_needs_anchor(self):
        with pytest.raises(ValueError):
            families.attach_star(families.path(3), 2, [])


class TestSeededGenerators:
    def test_random_chordal_is_chordal_connected(self):
        for seed in range(12):
            g = families.random_chordal(9, seed)
            assert g.is_connected() and is_chordal(g)

    def test_determinism(self):
        assert families.random_chordal(10, 5) == families.random_chordal(10, 5)
        assert families.random_tree(10, 5) == families.random_tree(10, 5)
        assert families.random_connected(8, 9) == families.random_connected(8, 9)

    def test_k1_chordal(self):
        assert families.random_chordal(1, 0) == families.complete(1)

    def test_random_tree_is_tree(self):
        for seed in range(8):
            g = families.random_tree(11, seed)
            assert g.is_connected() and g.m == g.n - 1

    def test_unicyclic(self):
        for seed in range(8):
            g = families.random_unicyclic(9, seed)
            assert g.is_connected() and g.m == g.n
