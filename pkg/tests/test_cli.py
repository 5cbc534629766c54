import json
import subprocess
import sys

import pytest

from tempoc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_json(fig1_path, capsys):
    code, out, _ = run_cli(
        capsys, "solve", "--graph", str(fig1_path), "--alpha", "0.5", "--query", "1,6"
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["window"] == [0, 2]
    assert rec["alpha"] == 0.5
    assert rec["query"] == [1, 6]
    assert rec["vertices"] == [1, 6]
    assert rec["edges"] == []
    assert rec["inefficiency"] == pytest.approx(1.0, abs=1e-9)
    assert rec["disconnected_query"] == [1, 6]
    assert "trace" not in rec and "pairs" not in rec


def test_solve_trace_and_pairs(fig1_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "solve", "--graph", str(fig1_path), "--alpha", "0.5", "--query", "1,6",
        "--trace", "--pairs",
    )
    assert code == 0
    rec = json.loads(out)
    assert [e[0] for e in rec["trace"]] == [None, 2, 4]
    assert [e[1] for e in rec["trace"]] == pytest.approx([2.4, 2.0, 1.0])
    assert len(rec["pairs"]) == 1
    u, v, c = rec["pairs"][0]
    assert (u, v) == (1, 6)
    assert c == pytest.approx(1.0)


def test_solve_respects_window(fig1_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "solve", "--graph", str(fig1_path), "--alpha", "0.5", "--query", "1,4",
        "--window", "0:1",
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["window"] == [0, 1]
    assert all(t <= 1 for _, _, t in rec["edges"])


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--graph", "x.csv", "--alpha", "1.5", "--query", "1"],
        ["solve", "--graph", "x.csv", "--alpha", "0.5"],
        ["solve", "--graph", "x.csv", "--alpha", "0.5", "--query", "1", "--window", "5"],
        ["solve", "--graph", "x.csv", "--alpha", "0.5", "--query", ""],
        ["stream", "--graph", "x.csv", "--alpha", "0.5", "--query", "1", "--window-size", "0"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_data_errors_exit_3(fig1_path, capsys, tmp_path):
    code, _, err = run_cli(
        capsys, "solve", "--graph", str(tmp_path / "nope.csv"), "--alpha", "0.5",
        "--query", "1",
    )
    assert code == 3 and "error:" in err

    code, _, err = run_cli(
        capsys, "solve", "--graph", str(fig1_path), "--alpha", "0.5", "--query", "99"
    )
    assert code == 3 and "99" in err

    code, _, err = run_cli(
        capsys,
        "solve", "--graph", str(fig1_path), "--alpha", "0.5", "--query", "1",
        "--window", "7:9",
    )
    assert code == 3 and "window" in err


def test_stream_jsonl(two_community_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "stream", "--graph", str(two_community_path), "--alpha", "0.5",
        "--query", "1,6", "--window-size", "3", "--lambda-in", "1",
        "--lambda-out", "1",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 8
    for i, line in enumerate(lines):
        rec = json.loads(line)
        assert rec["t"] == i + 2
        assert rec["window"] == [rec["t"] - 2, rec["t"]]
        assert set(rec) == {
            "t", "window", "Q_before", "Q_after", "S", "edges",
            "inefficiency", "disconnected_query",
        }
        assert rec["Q_before"] == sorted(rec["Q_before"])
        assert set(rec["Q_before"]) <= set(rec["S"])
        for u, v, t in rec["edges"]:
            assert rec["window"][0] <= t <= rec["window"][1]
            assert u in rec["S"] and v in rec["S"]


def test_stream_out_file(two_community_path, tmp_path, capsys):
    out_path = tmp_path / "run.jsonl"
    code, out, _ = run_cli(
        capsys,
        "stream", "--graph", str(two_community_path), "--alpha", "0.5",
        "--query", "1,6", "--window-size", "3", "--out", str(out_path),
    )
    assert code == 0 and out == ""
    lines = out_path.read_text().strip().split("\n")
    assert len(lines) == 8 and all(json.loads(l) for l in lines)


def test_compare_equal_alphas(two_community_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "compare", "--graph", str(two_community_path), "--alpha-a", "0.5",
        "--alpha-b", "0.5", "--query", "1,6", "--window-size", "3",
    )
    assert code == 0
    rows = [line.split("\t") for line in out.strip().split("\n")]
    assert len(rows) == 8
    for t, na, nb, j in rows:
        assert na == nb
        assert j == "1.000000"
    assert [int(r[0]) for r in rows] == list(range(2, 10))


def test_compare_jaccard_in_range(two_community_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "compare", "--graph", str(two_community_path), "--alpha-a", "0.1",
        "--alpha-b", "0.9", "--query", "1,6", "--window-size", "3",
    )
    assert code == 0
    for line in out.strip().split("\n"):
        j = float(line.split("\t")[3])
        assert 0.0 <= j <= 1.0


def test_debug_sfp_witness(fig1_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "debug", "sfp", "--graph", str(fig1_path), "--alpha", "0.5",
        "--from", "6", "--to", "1",
    )
    assert code == 0
    assert out.splitlines() == ["2.5", "(6,4,0),(4,2,1),(2,1,2)"]


def test_debug_sfp_unreachable(fig1_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "debug", "sfp", "--graph", str(fig1_path), "--alpha", "0.5",
        "--from", "1", "--to", "6",
    )
    assert code == 0
    assert out.splitlines() == ["inf"]


def test_debug_table(fig1_path, capsys):
    code, out, _ = run_cli(
        capsys, "debug", "table", "--graph", str(fig1_path), "--alpha", "0.5"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].split("\t") == ["u\\v", "1", "2", "3", "4", "5", "6"]
    grid = {
        int(parts[0]): parts[1:]
        for parts in (l.split("\t") for l in lines[1:])
    }
    assert grid[1][5] == "inf"  # d(1,6)
    assert grid[6][0] == "2.5"  # d(6,1)
    for i, v in enumerate([1, 2, 3, 4, 5, 6]):
        assert grid[v][i] == "0"


def test_debug_dot(fig1_path, capsys):
    code, plain, _ = run_cli(
        capsys, "debug", "dot", "--graph", str(fig1_path), "--alpha", "0.25"
    )
    assert code == 0
    node_lines = [l for l in plain.splitlines() if l.endswith('";') and "->" not in l]
    assert len(node_lines) == 18

    code, with_q, _ = run_cli(
        capsys,
        "debug", "dot", "--graph", str(fig1_path), "--alpha", "0.25",
        "--query", "1,6",
    )
    assert code == 0
    node_lines = [l for l in with_q.splitlines() if l.endswith('";') and "->" not in l]
    assert len(node_lines) == 22
    assert '"src:1"' in with_q and '"sink:6"' in with_q
    assert 'label="0.2500"' in with_q and 'label="0.7500"' in with_q


def test_module_entry_point(fig1_path):
    out = subprocess.run(
        [sys.executable, "-m", "tempoc.cli", "solve", "--graph", str(fig1_path),
         "--alpha", "0.5", "--query", "1,6"],
        capture_output=True,
        text=True,
        check=True,
    )
    rec = json.loads(out.stdout)
    assert rec["vertices"] == [1, 6]


def test_console_script_help():
    out = subprocess.run(
        ["tempoc", "--help"], capture_output=True, text=True
    )
    assert out.returncode == 0
    for name in ("solve", "stream", "compare", "debug"):
        assert name in out.stdout
