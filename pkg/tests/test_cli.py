import json

import pytest

from raagbraid import (
    build_halo,
    chromatic_number,
    graph_to_json_dict,
    halo_to_json_dict,
)
from raagbraid.cli import main
from raagbraid.graphs import dumps_canonical

from oracles import complete_graph, cycle_graph


def write_graph(tmp_path, g, name="graph.json"):
    path = tmp_path / name
    path.write_text(dumps_canonical(graph_to_json_dict(g)))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestColor:
    def test_c6_exact(self, tmp_path, capsys, c6):
        path = write_graph(tmp_path, c6)
        code, out, _ = run(capsys, ["color", "--input", path, "--exact"])
        assert code == 0
        data = json.loads(out)
        assert data["colors"] == 2

    def test_k4(self, tmp_path, capsys):
        path = write_graph(tmp_path, complete_graph(4))
        code, out, _ = run(capsys, ["color", "--input", path])
        assert code == 0
        assert json.loads(out)["colors"] == 4

    def test_malformed_json_exit_2(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run(capsys, ["color", "--input", str(path)])
        assert code == 2
        assert "error" in err

    def test_exact_size_bound_exit_3(self, tmp_path, capsys):
        path = write_graph(tmp_path, complete_graph(17))
        code, _, _ = run(capsys, ["color", "--input", path, "--exact"])
        assert code == 3

    def test_dot_output(self, tmp_path, capsys, c6):
        path = write_graph(tmp_path, c6)
        code, out, _ = run(capsys, ["color", "--input", path, "--format", "dot"])
        assert code == 0
        assert out.startswith("graph G {")


class TestHalo:
    def test_c6(self, tmp_path, capsys, c6):
        path = write_graph(tmp_path, c6)
        code, out, _ = run(capsys, ["halo", "--input", path, "--exact"])
        assert code == 0
        data = json.loads(out)
        assert data["planar"] is True
        assert data["report"]["ok"] is True
        assert data["path_threshold"] == "paper"
        assert set(data["halo"]["loops"]) == {f"a{i}" for i in range(1, 7)}

    def test_single_vertex(self, tmp_path, capsys):
        from raagbraid import SimpleGraph

        path = write_graph(tmp_path, SimpleGraph.make(["a"]))
        code, out, _ = run(capsys, ["halo", "--input", path])
        assert code == 0
        assert json.loads(out)["report"]["ok"] is True

    def test_improper_coloring_exit_4(self, tmp_path, capsys, c6):
        path = write_graph(tmp_path, c6)
        bad = tmp_path / "coloring.json"
        bad.write_text(json.dumps({"colors": 1, "assignment": {f"a{i}": 1 for i in range(1, 7)}}))
        code, _, err = run(capsys, ["halo", "--input", path, "--coloring", str(bad)])
        assert code == 4

    def test_coloring_file_roundtrip(self, tmp_path, capsys, c6):
        path = write_graph(tmp_path, c6)
        coloring = tmp_path / "coloring.json"
        coloring.write_text(json.dumps(chromatic_number(c6).to_json_dict()))
        code, out, _ = run(capsys, ["halo", "--input", path, "--coloring", str(coloring)])
        assert code == 0


class TestConfigspace:
    def test_p3(self, tmp_path, capsys):
        from oracles import path_graph

        path = write_graph(tmp_path, path_graph(3))
        code, out, _ = run(capsys, ["configspace", "--input", path, "--n", "2"])
        assert code == 0
        assert json.loads(out) == {"n": 2, "zero_cells": 3, "one_cells": 2}

    def test_n1_counts(self, tmp_path, capsys, c6):
        path = write_graph(tmp_path, c6)
        code, out, _ = run(capsys, ["configspace", "--input", path, "--n", "1"])
        data = json.loads(out)
        assert (data["zero_cells"], data["one_cells"]) == (6, 6)

    def test_budget_exit_3(self, tmp_path, capsys):
        path = write_graph(tmp_path, complete_graph(10))
        code, _, _ = run(
            capsys,
            ["configspace", "--input", path, "--n", "5", "--budget", "100"],
        )
        assert code == 3


class TestEmbed:
    def test_counterexample_unsquared_trivial(self, tmp_path, capsys, figure_delta):
        path = write_graph(tmp_path, figure_delta)
        coloring = tmp_path / "coloring.json"
        coloring.write_text(
            json.dumps({"colors": 3, "assignment": {"a": 1, "b": 2, "c": 3}})
        )
        word = "c b a b^-1 c^-1 b a^-1 b^-1"
        code, out, _ = run(
            capsys,
            [
                "embed", "--input", path, "--coloring", str(coloring),
                "--unsquared", word,
            ],
        )
        assert code == 0
        data = json.loads(out)
        assert data["trivial"] is True

        code, out, _ = run(
            capsys,
            ["embed", "--input", path, "--coloring", str(coloring), word],
        )
        assert json.loads(out)["trivial"] is False

    def test_empty_word_trivial(self, tmp_path, capsys, figure_delta):
        path = write_graph(tmp_path, figure_delta)
        code, out, _ = run(capsys, ["embed", "--input", path, ""])
        assert code == 0
        assert json.loads(out)["trivial"] is True

    def test_unknown_generator_exit_2(self, tmp_path, capsys, figure_delta):
        path = write_graph(tmp_path, figure_delta)
        code, _, _ = run(capsys, ["embed", "--input", path, "q r^-1"])
        assert code == 2


class TestVerify:
    def test_c6_bundle_passes(self, tmp_path, capsys, c6):
        path = write_graph(tmp_path, c6)
        code, out, _ = run(
            capsys,
            [
                "verify", "--input", path, "--exact",
                "--max-len", "3", "--samples", "25",
            ],
        )
        assert code == 0
        data = json.loads(out)
        assert data["pass"] is True
        assert data["path_threshold"] == "paper"

    def test_figure_has_counterexample_section(self, tmp_path, capsys, figure_delta):
        path = write_graph(tmp_path, figure_delta)
        code, out, _ = run(
            capsys,
            ["verify", "--input", path, "--max-len", "2", "--samples", "10"],
        )
        assert code == 0
        data = json.loads(out)
        names = [c["name"] for c in data["checks"]]
        assert "squaring-counterexample" in names

    def test_corrupted_halo_exit_4(self, tmp_path, capsys, c6):
        coloring = chromatic_number(c6)
        h = build_halo(c6, coloring)
        data = halo_to_json_dict(h)
        # delete one loop edge from the serialized halo
        a1 = data["loops"]["a1"]
        data["edges"] = [e for e in data["edges"] if e != sorted([a1[0], a1[1]])]
        path = tmp_path / "halo.json"
        path.write_text(json.dumps(data))
        code, out, _ = run(capsys, ["verify", "--input", str(path), "--samples", "0"])
        assert code == 4
        assert json.loads(out)["pass"] is False

    def test_verified_halo_bundle_passes(self, tmp_path, capsys, figure_delta, figure_coloring):
        h = build_halo(figure_delta, figure_coloring)
        path = tmp_path / "halo.json"
        path.write_text(json.dumps(halo_to_json_dict(h)))
        code, out, _ = run(
            capsys,
            ["verify", "--input", str(path), "--max-len", "2", "--samples", "5"],
        )
        assert code == 0

    def test_byte_identical_reruns(self, tmp_path, capsys, c6):
        path = write_graph(tmp_path, c6)
        argv = [
            "verify", "--input", path, "--exact",
            "--max-len", "2", "--samples", "20", "--seed", "7",
        ]
        _, first, _ = run(capsys, argv)
        _, second, _ = run(capsys, argv)
        assert first == second

    def test_text_format(self, tmp_path, capsys, figure_delta):
        path = write_graph(tmp_path, figure_delta)
        code, out, _ = run(
            capsys,
            [
                "verify", "--input", path, "--max-len", "1",
                "--samples", "5", "--format", "text",
            ],
        )
        assert code == 0
        assert "overall: pass" in out


def test_console_script_help():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "raagbraid", "--help"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "color" in proc.stdout and "verify" in proc.stdout
