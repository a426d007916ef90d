import json

import numpy as np
import pytest

from tileshuffle.cli import main

from helpers import toy_csv


@pytest.fixture()
def toy_file(tmp_path):
    path = tmp_path / "toy.csv"
    path.write_text(toy_csv())
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def test_rank_emits_tsv(capsys, toy_file):
    code, out = run(capsys, "rank", toy_file, "--seed", "3")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "i\tj\tcol_i\tcol_j\tscore"
    assert len(lines) == 7  # header + 6 pairs
    scores = [float(line.split("\t")[4]) for line in lines[1:]]
    assert scores == sorted(scores, reverse=True)


def test_rank_with_hypothesis_and_tiles(capsys, toy_file, tmp_path):
    tiles = tmp_path / "tiles.json"
    tiles.write_text(json.dumps([{"rows": list(range(10)), "cols": ["A", "D"]}]))
    hyp = tmp_path / "hyp.json"
    hyp.write_text(json.dumps({"mode": "focus", "partition": [["C"], ["D"]]}))
    code, out = run(capsys, "rank", toy_file, "--tiles", tiles,
                    "--hypothesis", hyp, "--widen", "--limit", "2")
    assert code == 0
    assert len(out.strip().split("\n")) == 3


def test_rank_missing_file_errors(capsys, tmp_path):
    assert main(["rank", str(tmp_path / "missing.csv")]) == 1


def test_sample_deterministic(capsys, toy_file):
    _, first = run(capsys, "sample", toy_file, "--seed", "5")
    _, second = run(capsys, "sample", toy_file, "--seed", "5")
    assert first == second
    _, third = run(capsys, "sample", toy_file, "--seed", "6")
    assert third != first


def test_sample_preserves_column_margins(capsys, toy_file):
    _, out = run(capsys, "sample", toy_file, "--seed", "1")
    header, *rows = out.strip().split("\n")
    assert header == "A,B,C,D"
    original = toy_csv().strip().split("\n")[1:]
    for j in range(4):
        sampled = sorted(r.split(",")[j] for r in rows)
        source = sorted(r.split(",")[j] for r in original)
        assert sampled == source


def test_sample_writes_files(capsys, toy_file, tmp_path):
    prefix = tmp_path / "surrogate_"
    code, _ = run(capsys, "sample", toy_file, "-n", "3", "--out", prefix, "--seed", "2")
    assert code == 0
    for k in (1, 2, 3):
        assert (tmp_path / f"surrogate_{k}.csv").exists()


def test_bench_single_combination(capsys):
    code, out = run(capsys, "bench", "--n", "60", "--m", "4", "--k", "2")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n\tm\tk\tt_init\tt_permute\tt_max_add"
    assert len(lines) == 2
    n, m, k, *times = lines[1].split("\t")
    assert (n, m, k) == ("60", "4", "2")
    assert all(float(t) >= 0 for t in times)


def test_bench_grid_shape(capsys):
    code, out = run(capsys, "bench", "--n", "40", "80", "--m", "3", "--k", "1", "2")
    assert code == 0
    assert len(out.strip().split("\n")) == 1 + 2 * 1 * 2
