import json
import subprocess
import sys

import pytest

from hypertorsion.cli import EXIT_CHECK, EXIT_INPUT, EXIT_OK, EXIT_PRECONDITION, main
from hypertorsion.hypertree import negate, translation_between

from conftest import CORPUS, GOLDEN, fixture_path, load_raw


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_OK, err
    return json.loads(out)


@pytest.fixture
def write_json(tmp_path):
    def write(name, data):
        p = tmp_path / name
        p.write_text(json.dumps(data))
        return p
    return write


class TestTrinity:
    def test_running_example(self, capsys):
        out = run_json(capsys, "trinity", fixture_path("running_example"))
        assert out["summary"] == {"R": 4, "E": 4, "V": 5, "n": 11}
        assert len(out["triangles"]) == 22
        assert sum(p["root"] for p in out["points"]) == 3

    def test_four_cycle(self, capsys):
        out = run_json(capsys, "trinity", fixture_path("four_cycle"))
        assert out["summary"] == {"R": 2, "E": 2, "V": 2, "n": 4}

    def test_text(self, capsys):
        code, out, _ = run(capsys, "trinity", fixture_path("running_example"), "--format", "text")
        assert code == 0 and out.startswith("|R|=4 |E|=4 |V|=5 n=11")

    def test_malformed_rotation_names_the_vertex(self, capsys, write_json):
        data = load_raw("running_example")
        data["rotations"]["v2"] = data["rotations"]["v2"][:-1]
        code, _, err = run(capsys, "trinity", write_json("bad.json", data))
        assert code == EXIT_INPUT and "'v2'" in err

    def test_missing_file_and_bad_json(self, capsys, tmp_path):
        assert run(capsys, "trinity", tmp_path / "nope.json")[0] == EXIT_INPUT
        bad = tmp_path / "bad.json"
        bad.write_text("{")
        assert run(capsys, "trinity", bad)[0] == EXIT_INPUT

    def test_not_two_connected(self, capsys, write_json):
        data = {"vertices": [{"id": "e", "color": "emerald"}, {"id": "v", "color": "violet"}],
                "edges": [["e", "v"]], "rotations": {"e": [0], "v": [0]}}
        assert run(capsys, "trinity", write_json("edge.json", data))[0] == EXIT_PRECONDITION


class TestHypertrees:
    def test_running_example(self, capsys):
        out = run_json(capsys, "hypertrees", fixture_path("running_example"))
        assert out["count"] == 11
        er = {tuple(v) for v in out["hypertrees"]}
        out = run_json(capsys, "hypertrees", fixture_path("running_example"), "--colors", "V,R")
        vr = {tuple(v) for v in out["hypertrees"]}
        assert len(vr) == 11
        assert translation_between(er, negate(vr)) is not None

    def test_single_hyperedge(self, capsys, write_json):
        p = write_json("h.json", {"vertices": ["a", "b", "c"], "hyperedges": [["a", "b", "c"]]})
        out = run_json(capsys, "hypertrees", p)
        assert out["hypertrees"] == [[2]]
        assert out["generating_polynomial"] == "r0^2"

    def test_sorted_output(self, capsys):
        out = run_json(capsys, "hypertrees", fixture_path("six_cycle"))
        assert out["hypertrees"] == sorted(out["hypertrees"])

    def test_disconnected_hypergraph(self, capsys, write_json):
        p = write_json("h.json", {"vertices": ["a", "b"], "hyperedges": [["a"], ["b"]]})
        assert run(capsys, "hypertrees", p)[0] == EXIT_PRECONDITION
        p = write_json("h2.json", {"vertices": ["a"], "hyperedges": [["z"]]})
        assert run(capsys, "hypertrees", p)[0] == EXIT_INPUT


class TestTorsion:
    def test_running_example(self, capsys):
        out = run_json(capsys, "torsion", fixture_path("running_example"), "--keep-r0")
        assert out["words"] == ["r1 r2^-1 r1 r2^-1 r1 r3^-1", "r1 r0^-1 r2 r0^-1", "r3 r2^-1 r3 r0^-1"]
        assert out["torsion"] == out["detM_enhanced"]
        assert out["unit"] == "r0^-1*r1*r2^-3"

    def test_base_generator_set_to_one(self, capsys):
        out = run_json(capsys, "torsion", fixture_path("running_example"))
        assert "r0" not in out["torsion"]
        assert out["unit"] is not None

    def test_arborescence_index(self, capsys):
        out = run_json(capsys, "torsion", fixture_path("running_example"), "--arborescence", "5")
        assert len(out["words"]) == 3
        assert run(capsys, "torsion", fixture_path("running_example"), "--arborescence", "11")[0] == EXIT_INPUT


class TestReplay:
    def test_matches_golden(self, capsys):
        out = run_json(capsys, "replay", fixture_path("running_example"))
        golden = json.loads((GOLDEN / "replay_running_example.json").read_text())
        assert out["rows"] == golden["rows"] and out["columns"] == golden["columns"]
        assert out["pivot_product"] == "r1*r2*r3"
        assert out["det_relation"] == 1 and out["columns_match"]
        assert len(out["steps"]) == 8

    def test_orders(self, capsys):
        f = fixture_path("running_example")
        assert run(capsys, "replay", f, "--order", "e1,v3,v2,e3,e2,v1,v4")[0] == EXIT_PRECONDITION
        assert run(capsys, "replay", f, "--order", "v3,v2")[0] == EXIT_PRECONDITION
        assert run(capsys, "replay", f, "--order", "q1,v2")[0] == EXIT_INPUT
        code, out, _ = run(capsys, "replay", f, "--format", "text")
        assert code == 0 and "pivot product: r1*r2*r3" in out


class TestVerify:
    @pytest.mark.parametrize("name", CORPUS)
    def test_corpus_passes(self, capsys, name):
        out = run_json(capsys, "verify", fixture_path(name), "--all-arborescences", "--replay")
        assert out["ok"] and out["theorem_holds"]
        assert set(out["checks"]) == {"theorem", "choice_independence", "symmetry", "convexity",
                                      "cardinalities", "replay"}

    def test_running_example_report(self, capsys):
        out = run_json(capsys, "verify", fixture_path("running_example"))
        assert out["detM"] == 11
        assert out["arborescence_counts"] == {"red": 11, "emerald": 11, "violet": 11}
        assert out["torsion"] == out["detM_enhanced"]
        assert out["pivot_product"] == "r1*r2*r3"

    def test_outer_face_override(self, capsys):
        for k in range(4):
            out = run_json(capsys, "verify", fixture_path("running_example"), "--outer-face", k)
            assert out["ok"]

    def test_corrupted_fixture(self, capsys, write_json):
        data = load_raw("running_example")
        data["rotations"]["e1"] = data["rotations"]["e1"][1:]
        assert run(capsys, "verify", write_json("c.json", data))[0] == EXIT_INPUT

    def test_failed_check_exit_code(self, capsys, monkeypatch):
        import hypertorsion.cli as cli
        monkeypatch.setattr(cli, "is_convex_lattice_set", lambda s: False)
        code, out, err = run(capsys, "verify", fixture_path("four_cycle"))
        assert code == EXIT_CHECK and "check failed: convexity" in err
        assert json.loads(out)["ok"] is False

    def test_text(self, capsys):
        code, out, _ = run(capsys, "verify", fixture_path("theta"), "--format", "text")
        assert code == 0 and "PASS theorem" in out


def test_deterministic_output(capsys):
    first = run(capsys, "verify", fixture_path("six_cycle"), "--all-arborescences", "--replay")
    second = run(capsys, "verify", fixture_path("six_cycle"), "--all-arborescences", "--replay")
    assert first == second


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "hypertorsion", "trinity", str(fixture_path("theta")),
                          "--format", "text"], capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.splitlines()[0].startswith("|R|=3")
