import itertools
import random

import pytest

from hypertorsion.planar import (CombMap, MapError, NotTwoConnected, OrientedDual,
                                 adjacency_matrix, build_trinity, column_labels,
                                 decompose_matching, enhanced_matrix, enumerate_arborescences,
                                 enumerate_tutte_matchings, is_arborescence, is_two_connected,
                                 matching_from_arborescence, matching_sign, parse_point,
                                 row_labels, trace_faces)
from hypertorsion.polyring import PolyMatrix, det, det_permutation

from conftest import CORPUS, load_raw
from randmaps import four_cycle, random_map
from test_polyring import ENHANCED_DET

M_ROWS = ["0111000000", "0000011101", "1000000010", "1100000100", "0001001000",
          "0010110000", "0100001000", "0001010000", "0000100001", "0000000110"]
ENHANCED_ROWS = [
    list("0111000000"), list("0000011101"), list("1000000010"),
    ["r3", "r1", "0", "0", "0", "0", "0", "r2", "0", "0"],
    ["0", "0", "0", "r1", "0", "0", "r2", "0", "0", "0"],
    ["0", "0", "r1", "0", "r0", "r2", "0", "0", "0", "0"],
    list("0100001000"), list("0001010000"), list("0000100001"), list("0000000110")]
# corners (red, emerald, violet) of the white triangles t0..t10 of the running example
WHITE = [(0, 0, 0), (3, 1, 0), (1, 1, 1), (1, 3, 0), (1, 2, 2), (0, 3, 3),
         (2, 3, 2), (2, 2, 1), (2, 1, 4), (3, 0, 4), (2, 0, 3)]
DIAGONAL = {"r1": 4, "r2": 10, "r3": 9, "e1": 1, "v4": 8, "v1": 2, "e2": 7, "e3": 3, "v2": 6, "v3": 5}


def single_edge():
    return CombMap(["e0", "v0"], {"e0": "E", "v0": "V"}, [("e0", "v0")], {"e0": [0], "v0": [0]})


def arbo_counts(t):
    return [len(enumerate_arborescences(t.oriented_dual(c), 0)) for c in "REV"]


class TestCombMap:
    def test_four_cycle_faces(self):
        faces = trace_faces(four_cycle())
        assert [len(f) for f in faces] == [4, 4]

    def test_single_edge_has_one_face_of_length_two(self):
        g = single_edge()
        faces = trace_faces(g)
        assert [len(f) for f in faces] == [2]
        assert not is_two_connected(g)
        with pytest.raises(NotTwoConnected):
            build_trinity(g)

    def test_running_example_faces(self, running):
        g = running.graph
        assert len(g.emerald()) == 4 and len(g.violet()) == 5
        assert len(trace_faces(g)) == 4

    def test_json_round_trip(self, running):
        g = running.graph
        assert CombMap.from_json(g.to_json()).to_json() == g.to_json()

    @pytest.mark.parametrize("mutate, msg", [
        (lambda d: d["edges"].append(["e1", "e2"]), "two emerald"),
        (lambda d: d["edges"].append(["e1", "x9"]), "unknown vertex"),
        (lambda d: d["rotations"]["e1"].pop(), "rotation"),
        (lambda d: d.pop("rotations"), "missing"),
        (lambda d: d["vertices"].append({"id": "q", "color": "red"}), "emerald or violet"),
        (lambda d: d["vertices"].append({"id": "q", "color": "blue"}), "q"),
    ])
    def test_invalid_input(self, mutate, msg):
        data = load_raw("running_example")
        mutate(data)
        with pytest.raises(MapError, match=msg):
            CombMap.from_json(data)

    def test_bad_rotation_is_not_a_sphere(self):
        data = load_raw("running_example")
        v = next(k for k, r in data["rotations"].items() if len(r) >= 3)
        data["rotations"][v] = data["rotations"][v][::-1]
        with pytest.raises(MapError):
            trace_faces(CombMap.from_json(data))

    def test_cut_vertex_rejected(self):
        # two 4-cycles sharing the vertex e0
        g = four_cycle()
        walks = [[(0, 0), (1, 1), (2, 0), (3, 1), (4, 0), (5, 1), (6, 0), (7, 1)],
                 [(1, 0), (0, 1), (3, 0), (2, 1)], [(5, 0), (4, 1), (7, 0), (6, 1)]]
        ids = g.vertex_ids + ["e2", "v2", "v3"]
        colors = dict(g.colors, e2="E", v2="V", v3="V")
        edges = list(g.edges) + [("e0", "v2"), ("e2", "v2"), ("e2", "v3"), ("e0", "v3")]
        h = CombMap.from_face_walks(ids, colors, edges, walks)
        assert len(trace_faces(h)) == 3
        assert not is_two_connected(h)
        with pytest.raises(NotTwoConnected):
            build_trinity(h)


class TestRunningExample:
    def test_summary(self, running):
        assert running.summary() == {"R": 4, "E": 4, "V": 5, "n": 11}

    def test_white_triangles(self, running):
        assert [(w.red, w.emerald, w.violet) for w in running.white] == WHITE
        assert all(w.shade == "white" for w in running.white)
        assert all(b.shade == "black" for b in running.black)

    def test_adjacency_matrix(self, running):
        m = adjacency_matrix(running)
        assert m == PolyMatrix.from_rows([list(r) for r in M_ROWS])
        assert row_labels(running) == ["r1", "r2", "r3", "e1", "e2", "e3", "v1", "v2", "v3", "v4"]
        assert column_labels(running) == [f"t{i}" for i in range(1, 11)]
        assert det(m).evaluate({}) == 11

    def test_enhanced_matrix(self, running):
        m = enhanced_matrix(running, "R", "E")
        assert m == PolyMatrix.from_rows(ENHANCED_ROWS)
        assert det(m) == ENHANCED_DET
        ones = m.map(lambda p: p.substitute({v: 1 for v in p.variables()}))
        assert ones == adjacency_matrix(running)

    def test_six_enhancements_specialize_to_m(self, running):
        m = adjacency_matrix(running)
        for a, b in itertools.permutations("REV", 2):
            e = enhanced_matrix(running, a, b)
            assert e.map(lambda p: p.substitute({v: 1 for v in p.variables()})) == m
        with pytest.raises(ValueError):
            enhanced_matrix(running, "R", "R")

    def test_arborescence_counts(self, running):
        assert arbo_counts(running) == [11, 11, 11]

    def test_tutte_matchings(self, running):
        ms = enumerate_tutte_matchings(running)
        assert len(ms) == 11
        assert len({matching_sign(running, m) for m in ms}) == 1

    def test_diagonal_matching(self, running):
        red = [a for a in enumerate_arborescences(running.oriented_dual("R"), 0)
               if a.arcs == frozenset({4, 10, 9})]
        assert len(red) == 1
        m = matching_from_arborescence(running, red[0])
        assert m == {parse_point(k): v for k, v in DIAGONAL.items()}

    def test_matching_arborescence_correspondence(self, running):
        matchings = enumerate_tutte_matchings(running)
        key = lambda m: tuple(sorted(m.items()))
        for c in "REV":
            arbs = enumerate_arborescences(running.oriented_dual(c), 0)
            got = [matching_from_arborescence(running, a) for a in arbs]
            assert sorted(map(key, got)) == sorted(map(key, matchings))
            for a, m in zip(arbs, got):
                assert decompose_matching(running, m)[c] == a.arcs


class TestDuals:
    def test_two_cycle(self):
        d = OrientedDual("R", 2, {0: (0, 1), 1: (1, 0)})
        assert len(enumerate_arborescences(d, 0)) == 1
        assert len(enumerate_arborescences(d, 1)) == 1
        assert is_arborescence(d, 0, [0]) and not is_arborescence(d, 0, [1])

    def test_dual_arc_counts(self, corpus):
        for t in corpus.values():
            for c in "REV":
                d = t.oriented_dual(c)
                assert len(d.arcs) == t.n

    def test_arborescence_rejects_bad_input(self, running):
        d = running.oriented_dual("R")
        assert not is_arborescence(d, 0, [4, 10])
        assert not is_arborescence(d, 0, [4, 10, 9, 1])


class TestCorpus:
    @pytest.mark.parametrize("name", CORPUS)
    def test_euler_and_tree_trinity(self, corpus, name):
        t = corpus[name]
        s = t.summary()
        assert s["R"] + s["E"] + s["V"] == s["n"] + 2
        d = det(adjacency_matrix(t)).evaluate({})
        assert arbo_counts(t) == [abs(d)] * 3
        assert len(enumerate_tutte_matchings(t)) == abs(d)

    def test_four_cycle(self, corpus):
        t = corpus["four_cycle"]
        assert t.summary() == {"R": 2, "E": 2, "V": 2, "n": 4}
        m = adjacency_matrix(t)
        # n - 1 non-outer white triangles, n - 1 non-root points
        assert (m.rows, m.cols) == (3, 3)
        assert abs(det_permutation(m).evaluate({})) == len(enumerate_tutte_matchings(t))

    def test_outer_triangle_choice(self, corpus):
        for name in ("running_example", "six_cycle", "theta"):
            g = corpus[name].graph
            ref = abs(det(adjacency_matrix(corpus[name])).evaluate({}))
            for k in range(corpus[name].n):
                t = build_trinity(g, outer_triangle=k)
                assert abs(det(adjacency_matrix(t)).evaluate({})) == ref


class TestRandomMaps:
    def test_random_trinities(self):
        rng = random.Random(2024)
        for _ in range(25):
            g = random_map(rng, rng.randint(0, 5))
            assert is_two_connected(g)
            t = build_trinity(g)
            s = t.summary()
            assert s["R"] + s["E"] + s["V"] == s["n"] + 2
            d = abs(det(adjacency_matrix(t)).evaluate({}))
            assert arbo_counts(t) == [d, d, d]
            k = rng.randrange(t.n)
            assert abs(det(adjacency_matrix(build_trinity(g, outer_triangle=k))).evaluate({})) == d

    def test_matching_from_arborescence_is_injective(self):
        rng = random.Random(99)
        for _ in range(8):
            t = build_trinity(random_map(rng, 4))
            for c in "REV":
                arbs = enumerate_arborescences(t.oriented_dual(c), 0)
                ms = {tuple(sorted(matching_from_arborescence(t, a).items())) for a in arbs}
                assert len(ms) == len(arbs)
