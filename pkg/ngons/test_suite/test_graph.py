"""
Tests for the compatibility graph and clique extraction.
"""

from django.test import SimpleTestCase

from ngons.candidates import ApexCandidate, Sign
from ngons.graph import (
    bron_kerbosch,
    build_graph,
    degeneracy_order,
    drop_dominated,
    find_max_cliques,
    repair,
)
from ngons.search import SearchConfig


class BuildGraphTest(SimpleTestCase):
    """Test graph construction over the apex candidates."""

    def test_unit_baseline_has_no_edges(self):
        """Test that k = 1 apexes are pairwise incompatible."""
        g = build_graph(SearchConfig(k=1, max_dist=3))
        self.assertEqual(len(g.vertices), 6)
        self.assertEqual(g.edge_count, 0)

    def test_rectangle_edge(self):
        """Test the edge joining the rectangle apexes."""
        g = build_graph(SearchConfig(k=3, max_dist=5))
        i = g.vertices.index(ApexCandidate.build(3, 4, 5, Sign.PLUS))
        j = g.vertices.index(ApexCandidate.build(3, 5, 4, Sign.PLUS))
        self.assertEqual(g.distance(i, j), 3)
        self.assertIn(j, g.neighbors(i))

    def test_vertical_pair_is_excluded(self):
        """(0, 4) and (0, -4) are 8 apart but collinear with P."""
        g = build_graph(SearchConfig(k=3, max_dist=5))
        i = g.vertices.index(ApexCandidate.build(3, 4, 5, Sign.PLUS))
        j = g.vertices.index(ApexCandidate.build(3, 4, 5, Sign.MINUS))
        self.assertIsNone(g.distance(i, j))

    def test_edges_share_radicand(self):
        """Test that edges only join apexes with the same radicand."""
        g = build_graph(SearchConfig(k=3, max_dist=12))
        for i, j in g.edges:
            self.assertEqual(g.vertices[i].D, g.vertices[j].D)

    def test_parallel_matches_serial(self):
        """Test that pooled graph building matches serial."""
        cfg = SearchConfig(k=2, max_dist=12)
        self.assertEqual(build_graph(cfg, workers=1).edges, build_graph(cfg, workers=2).edges)


class CliqueTest(SimpleTestCase):
    """Test maximal clique enumeration and repair."""

    def test_triangle_graph(self):
        """Test the single clique of a triangle."""
        adjacency = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
        self.assertEqual(bron_kerbosch(adjacency), [frozenset({0, 1, 2})])

    def test_edgeless_graph(self):
        """Test that isolated vertices are their own cliques."""
        cliques = bron_kerbosch({0: set(), 1: set(), 2: set()})
        self.assertEqual(sorted(cliques, key=sorted), [frozenset({0}), frozenset({1}), frozenset({2})])

    def test_two_triangles_sharing_an_edge(self):
        """Test two maximal cliques sharing an edge."""
        adjacency = {0: {1, 2, 3}, 1: {0, 2, 3}, 2: {0, 1}, 3: {0, 1}}
        self.assertEqual(
            sorted(bron_kerbosch(adjacency), key=sorted),
            [frozenset({0, 1, 2}), frozenset({0, 1, 3})],
        )

    def test_degeneracy_order(self):
        """Test the degeneracy order of a star."""
        star = {0: {1, 2, 3}, 1: {0}, 2: {0}, 3: {0}}
        self.assertEqual(degeneracy_order(star), [1, 2, 0, 3])

    def test_repair_branches_on_violation(self):
        """Test that repair branches on a violating triple."""
        def find(indices):
            return (0, 1, 2) if {0, 1, 2} <= set(indices) else None

        self.assertEqual(
            repair(frozenset({0, 1, 2, 3}), find),
            {frozenset({1, 2, 3}), frozenset({0, 2, 3}), frozenset({0, 1, 3})},
        )

    def test_drop_dominated(self):
        """Test that subsets of other cliques are dropped."""
        kept = drop_dominated([frozenset({1}), frozenset({1, 2}), frozenset({3})])
        self.assertEqual(kept, [frozenset({1, 2}), frozenset({3})])

    def test_empty_graph_gives_singletons(self):
        """Test singleton cliques on an edgeless graph."""
        g = build_graph(SearchConfig(k=1, max_dist=3))
        self.assertEqual(find_max_cliques(g, min_size=1), [(0,), (1,), (2,), (3,), (4,), (5,)])
        self.assertEqual(find_max_cliques(g, min_size=2), [])

    def test_rectangle_clique(self):
        """Test that the rectangle apexes form a clique."""
        g = build_graph(SearchConfig(k=3, max_dist=20))
        i = g.vertices.index(ApexCandidate.build(3, 4, 5, Sign.PLUS))
        j = g.vertices.index(ApexCandidate.build(3, 5, 4, Sign.PLUS))
        cliques = find_max_cliques(g, min_size=2)
        self.assertTrue(any({i, j} <= set(clique) for clique in cliques))
        self.assertEqual(cliques, sorted(cliques, key=lambda c: (-len(c), c)))
