import itertools
import random

import pytest

from hypertorsion.hypertree import (Hypergraph, abstract_dual, all_six_hypergraphs,
                                    enumerate_hypertrees_bruteforce, enumerate_hypertrees_polytope,
                                    generating_polynomial, hypertrees_from_spanning_trees,
                                    is_hypertree_polytope, is_submodular, mu, negate,
                                    normalize_translation, planar_dual, product_support,
                                    spanning_trees, subdivide_edge_set, translation_between)
from hypertorsion.planar import adjacency_matrix, build_trinity, trinity_from_json_file
from hypertorsion.polyring import det, support_vectors

from conftest import CORPUS, fixture_path, load_raw
from randmaps import random_hypergraph, random_map
from test_polyring import ENHANCED_DET


def components(h, sub):
    """Connected components of bip(H) restricted to the hyperedges in ``sub``, by BFS."""
    nodes = {("h", k) for k in sub} | {("v", v) for k in sub for v in h.hyperedges[k]}
    seen, count = set(), 0
    for start in nodes:
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            kind, x = stack.pop()
            nbrs = ([("v", v) for v in h.hyperedges[x]] if kind == "h"
                    else [("h", k) for k in sub if x in h.hyperedges[k]])
            for y in nbrs:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


class TestBasics:
    def test_one_vertex_one_edge(self):
        h = Hypergraph.build(["a"], [["a"]])
        assert enumerate_hypertrees_bruteforce(h).vectors == {(0,)}
        assert enumerate_hypertrees_polytope(h).vectors == {(0,)}

    def test_invalid(self):
        with pytest.raises(ValueError):
            Hypergraph.build(["a"], [[]])
        with pytest.raises(ValueError):
            Hypergraph.build(["a"], [["b"]])
        with pytest.raises(ValueError):
            Hypergraph.build(["a", "a"], [["a"]])
        h = Hypergraph.build(["a", "b"], [["a"], ["b"]])
        assert not h.is_connected()
        with pytest.raises(ValueError):
            enumerate_hypertrees_bruteforce(h)
        with pytest.raises(ValueError):
            enumerate_hypertrees_polytope(h)

    def test_json_round_trip(self):
        h = Hypergraph.build(["a", "b", "c"], [["a", "b"], ["b", "c"]], ["p", "q"])
        assert Hypergraph.from_json(h.to_json()) == h

    def test_graph_case_counts_spanning_trees(self):
        # an ordinary graph: hypertrees are 0/1 indicator vectors of spanning trees
        tri = Hypergraph.build("abc", [["a", "b"], ["b", "c"], ["a", "c"]])
        assert enumerate_hypertrees_bruteforce(tri).vectors == {(1, 1, 0), (1, 0, 1), (0, 1, 1)}

    def test_spanning_trees_of_k4(self):
        edges = list(itertools.combinations(range(4), 2))
        assert len(list(spanning_trees(4, edges))) == 16

    def test_multiset_hyperedges_are_distinct_coordinates(self):
        h = Hypergraph.build("ab", [["a", "b"], ["a", "b"]])
        assert enumerate_hypertrees_bruteforce(h).vectors == {(1, 0), (0, 1)}


class TestMu:
    def test_examples(self):
        h = Hypergraph.build("abcd", [["a", "b"], ["c"], ["a", "b", "c", "d"]])
        assert mu(h, [0]) == 1
        assert mu(h, [2]) == 3
        assert mu(h, [0, 1]) == 3 - 2
        for bad in ([], [0, 1, 2]):
            with pytest.raises(ValueError):
                mu(h, bad)

    def test_running_example_against_component_count(self, running):
        h = planar_dual(running, "E", "R")
        for size in range(1, len(h.hyperedges)):
            for sub in itertools.combinations(range(len(h.hyperedges)), size):
                covered = set().union(*(h.hyperedges[k] for k in sub))
                assert mu(h, sub) == len(covered) - components(h, sub)

    def test_submodular_on_random(self):
        rng = random.Random(1)
        for _ in range(30):
            assert is_submodular(random_hypergraph(rng, 8))

    def test_polytope_membership(self):
        h = Hypergraph.build("abc", [["a", "b"], ["b", "c"]])
        assert is_hypertree_polytope(h, (1, 1))
        assert not is_hypertree_polytope(h, (1, 0))
        assert not is_hypertree_polytope(h, (2, 0))
        assert not is_hypertree_polytope(h, (1,))


class TestOracles:
    def test_three_methods_agree_on_random(self):
        rng = random.Random(17)
        for _ in range(60):
            h = random_hypergraph(rng)
            a = enumerate_hypertrees_bruteforce(h).vectors
            assert a == hypertrees_from_spanning_trees(h)
            assert a == enumerate_hypertrees_polytope(h).vectors
            assert all(sum(f) == h.rank for f in a)

    def test_running_example_set(self, running):
        q = enumerate_hypertrees_bruteforce(planar_dual(running, "E", "R")).vectors
        assert len(q) == 11
        assert q == support_vectors(ENHANCED_DET, 4)


class TestDuality:
    def test_abstract_dual_involution(self):
        rng = random.Random(4)
        for _ in range(20):
            h = random_hypergraph(rng)
            names = tuple(f"h{k}" for k in range(len(h.hyperedges)))
            h = Hypergraph(h.vertices, h.hyperedges, names)
            assert abstract_dual(abstract_dual(h)) == h

    def test_six_hypergraphs_via_dualities(self, running):
        six = all_six_hypergraphs(running)
        assert len(six) == 6
        for (a, b), h in six.items():
            d = abstract_dual(h)
            assert d.vertices == six[(b, a)].vertices
            assert set(d.hyperedges) == set(six[(b, a)].hyperedges)
        with pytest.raises(ValueError):
            planar_dual(running, "E", "E")

    def test_postnikov_on_random_planar(self):
        rng = random.Random(8)
        for _ in range(10):
            t = build_trinity(random_map(rng, rng.randint(0, 4)))
            for a, b in (("E", "V"), ("R", "E"), ("V", "R")):
                q1 = enumerate_hypertrees_bruteforce(planar_dual(t, a, b))
                q2 = enumerate_hypertrees_bruteforce(planar_dual(t, b, a))
                assert len(q1) == len(q2)

    @pytest.mark.parametrize("name", CORPUS)
    def test_symmetry_and_cardinality(self, corpus, name):
        t = corpus[name]
        n = abs(det(adjacency_matrix(t)).evaluate({}))
        sets = {k: enumerate_hypertrees_bruteforce(h).vectors for k, h in all_six_hypergraphs(t).items()}
        assert all(len(s) == n for s in sets.values())
        assert translation_between(sets[("E", "R")], negate(sets[("V", "R")])) is not None


class TestSetOperations:
    def test_normalize_and_translation(self):
        s = {(2, 3), (3, 2)}
        assert normalize_translation(s) == {(0, 1), (1, 0)}
        assert translation_between({(0, 1), (1, 0)}, s) == (2, 2)
        assert translation_between({(0, 0)}, {(0, 0), (1, 1)}) is None
        assert normalize_translation([]) == frozenset()

    def test_subdivide_single_point(self):
        out = subdivide_edge_set({(0, 0, 1)}, 0, 2)
        assert out == {(1, 0, 1), (0, 0, 2)}
        with pytest.raises(ValueError):
            subdivide_edge_set({(0, 0)}, 0, 2)

    def test_subdivided_graph(self, corpus):
        t = trinity_from_json_file(fixture_path("running_example_unsubdivided"))
        edge = load_raw("running_example_unsubdivided")["subdivided_edge"]
        r1 = next(w.red for w in t.white if w.edge == edge)
        r2 = next(b.red for b in t.black if b.edge == edge)
        q = enumerate_hypertrees_bruteforce(planar_dual(t, "E", "R")).vectors
        target = enumerate_hypertrees_bruteforce(planar_dual(corpus["running_example"], "E", "R")).vectors
        assert translation_between(subdivide_edge_set(q, r1, r2), target) is not None

    def test_product(self):
        a = {(0, 1), (1, 0)}
        b = {(2,), (3,), (4,)}
        p = product_support(a, b)
        assert len(p) == 6 and (1, 0, 4) in p
        assert product_support({(0,)}, b) == {(0, 2), (0, 3), (0, 4)}

    def test_generating_polynomial(self):
        p = generating_polynomial({(1, 0), (0, 2)})
        assert support_vectors(p, 2) == {(1, 0), (0, 2)}
