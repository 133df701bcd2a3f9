import json

import pytest

from recolor import cli
from recolor.generators import gen_interval_colorings, gen_interval_family
from recolor.graph import Graph


def _write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def k3_files(tmp_path):
    g = _write(tmp_path / "g.json", Graph(3, [(0, 1), (1, 2), (0, 2)]).to_json())
    a = _write(tmp_path / "a.json", {"k": 3, "colors": [1, 2, 3]})
    b = _write(tmp_path / "b.json", {"k": 3, "colors": [2, 1, 3]})
    return g, a, b


@pytest.fixture
def interval_files(tmp_path):
    g = _write(tmp_path / "g.json", gen_interval_family(8).to_json())
    a = _write(tmp_path / "a.json", gen_interval_colorings(8, set()).to_json())
    b = _write(tmp_path / "b.json", gen_interval_colorings(8, {1}).to_json())
    return g, a, b


def _payload(capsys):
    out = capsys.readouterr().out
    assert out.endswith("\n")
    return json.loads(out)


def test_reach_yes_is_exit_zero(k3_files, capsys):
    g, a, _ = k3_files
    code = cli.main(["reach", g, "-k", "3", "--alpha", a, "--beta", a, "--mode", "oracle"])
    assert code == cli.EXIT_YES
    payload = _payload(capsys)
    assert payload["answer"] == "YES"
    assert payload["counters"]["solution_graph_nodes"] == 6
    assert payload["counters"]["csg_nodes_peak"] is None


def test_reach_no_is_exit_one(k3_files, capsys):
    g, a, b = k3_files
    for mode in ("oracle", "generic", "fast"):
        code = cli.main(["reach", g, "-k", "3", "--alpha", a, "--beta", b, "--mode", mode])
        assert code == cli.EXIT_NO, mode
        assert _payload(capsys)["answer"] == "NO"


def test_reach_fast_counters(interval_files, capsys):
    g, a, b = interval_files
    code = cli.main(["reach", g, "-k", "4", "--alpha", a, "--beta", b, "--mode", "fast"])
    assert code == cli.EXIT_YES
    payload = _payload(capsys)
    assert payload["mode"] == "fast"
    assert payload["early_stop"] is False
    assert payload["counters"]["decomposition_nodes"] == 10
    assert payload["counters"]["solution_graph_nodes"] is None


def test_reach_input_errors(k3_files, tmp_path, capsys):
    g, a, _ = k3_files
    missing = str(tmp_path / "nope.json")
    assert cli.main(["reach", missing, "-k", "3", "--alpha", a, "--beta", a]) == cli.EXIT_INPUT
    # coloring k disagrees with the -k flag
    assert cli.main(["reach", g, "-k", "4", "--alpha", a, "--beta", a]) == cli.EXIT_INPUT
    improper = _write(tmp_path / "bad.json", {"k": 3, "colors": [1, 1, 3]})
    assert cli.main(["reach", g, "-k", "3", "--alpha", improper, "--beta", a]) == cli.EXIT_INPUT
    assert cli.main(["reach", g, "-k", "3", "--alpha", a, "--beta", a, "--budget", "-2"]) == cli.EXIT_INPUT
    capsys.readouterr()


def test_reach_budget_exit(interval_files, capsys, monkeypatch):
    g, a, b = interval_files
    args = ["reach", g, "-k", "4", "--alpha", a, "--beta", b, "--mode", "generic"]
    assert cli.main(args + ["--budget", "3"]) == cli.EXIT_BUDGET
    # without the flag the environment override applies
    monkeypatch.setenv("CSG_BUDGET", "3")
    assert cli.main(args) == cli.EXIT_BUDGET
    monkeypatch.delenv("CSG_BUDGET")
    assert cli.main(args) == cli.EXIT_YES
    capsys.readouterr()


def test_stdout_is_byte_identical(interval_files, capsys):
    g, a, b = interval_files
    args = ["reach", g, "-k", "4", "--alpha", a, "--beta", b, "--mode", "generic"]
    cli.main(args)
    first = capsys.readouterr()
    cli.main(args)
    second = capsys.readouterr()
    assert first.out == second.out
    assert "[timing] reach:" in first.err  # timings stay off stdout


def test_out_flag_matches_stdout(interval_files, tmp_path, capsys):
    g, a, b = interval_files
    args = ["reach", g, "-k", "4", "--alpha", a, "--beta", b]
    cli.main(args)
    streamed = capsys.readouterr().out
    target = tmp_path / "payload.json"
    cli.main(args + ["--out", str(target)])
    assert capsys.readouterr().out == ""
    assert target.read_text() == streamed


def test_gen_roundtrip_and_determinism(tmp_path, capsys):
    args = ["gen", "chordal", "-n", "12", "-k", "4", "--seed", "3"]
    assert cli.main(args) == cli.EXIT_YES
    first = capsys.readouterr().out
    cli.main(args)
    assert capsys.readouterr().out == first
    g = Graph.from_json(json.loads(first))
    assert g.n == 12

    assert cli.main(["gen", "interval-colorings", "-p", "8", "--subset", "1"]) == cli.EXIT_YES
    payload = _payload(capsys)
    assert payload == gen_interval_colorings(8, {1}).to_json()

    assert cli.main(["gen", "blowup", "-p", "2"]) == cli.EXIT_YES
    assert json.loads(capsys.readouterr().out)["n"] == 13

    assert cli.main(["gen", "interval", "-p", "3"]) == cli.EXIT_INPUT
    capsys.readouterr()


def test_decompose_json_and_dot(interval_files, capsys):
    g, _, _ = interval_files
    assert cli.main(["decompose", g]) == cli.EXIT_YES
    payload = _payload(capsys)
    assert payload["within_budget"] is True
    assert payload["width"] == 3
    assert payload["node_count"] == len(payload["decomposition"]["nodes"])

    assert cli.main(["decompose", g, "--root-clique", "6,7"]) == cli.EXIT_YES
    rooted = _payload(capsys)
    assert rooted["within_budget"] is True

    assert cli.main(["decompose", g, "--format", "dot"]) == cli.EXIT_YES
    dot = capsys.readouterr().out
    assert dot.startswith("digraph") and "->" in dot

    # 0 and 7 are not adjacent, so they cannot root a clique decomposition
    assert cli.main(["decompose", g, "--root-clique", "0,7"]) == cli.EXIT_INPUT
    assert cli.main(["decompose", g, "--root-clique", "0,99"]) == cli.EXIT_INPUT
    capsys.readouterr()


def test_csg_command(k3_files, tmp_path, capsys):
    g, a, _ = k3_files
    assert cli.main(["csg", g, "-k", "3", "--terminals", "0"]) == cli.EXIT_YES
    payload = _payload(capsys)
    # all six triangle colorings are frozen, so no parts merge
    assert sorted(payload["csg"]["nodes"]) == [[1], [1], [2], [2], [3], [3]]
    assert payload["csg"]["edges"] == []
    assert payload["csg"]["marks"] is None

    rotated = _write(tmp_path / "rot.json", {"k": 3, "colors": [2, 3, 1]})
    assert cli.main(
        ["csg", g, "-k", "3", "--terminals", "0", "--alpha", a, "--beta", rotated]
    ) == cli.EXIT_YES
    marked = _payload(capsys)
    marks = marked["csg"]["marks"]
    assert marks["alpha"] != marks["beta"]  # K3 colorings are frozen

    assert cli.main(["csg", g, "-k", "3", "--alpha", a]) == cli.EXIT_INPUT
    assert cli.main(["csg", g, "-k", "3", "--terminals", "0,0"]) == cli.EXIT_INPUT
    capsys.readouterr()

    assert cli.main(["csg", g, "-k", "3", "--terminals", "0", "--format", "dot"]) == cli.EXIT_YES
    assert capsys.readouterr().out.startswith("graph")


def test_verify_battery(k3_files, capsys):
    g, _, _ = k3_files
    assert cli.main(["verify", g, "-k", "3"]) == cli.EXIT_YES
    payload = _payload(capsys)
    assert payload["ok"] is True
    assert payload["checks"] and all(row["ok"] for row in payload["checks"])


def test_verify_size_cap(interval_files, capsys):
    g, _, _ = interval_files
    assert cli.main(["verify", g, "-k", "4"]) == cli.EXIT_INPUT
    assert cli.main(["verify", g, "-k", "4", "--max-n", "8"]) == cli.EXIT_YES
    capsys.readouterr()


def test_verify_external_csg(k3_files, tmp_path, capsys):
    g, _, _ = k3_files
    good = _write(
        tmp_path / "good.json",
        {
            "k": 3,
            "terminal_order": [0],
            "nodes": [[1], [2], [3], [1], [2], [3]],
            "edges": [],
            "marks": None,
        },
    )
    assert cli.main(["verify", g, "-k", "3", "--csg", good]) == cli.EXIT_YES
    assert _payload(capsys)["ok"] is True

    # drop half the nodes: labels stay legal but the isomorphism check fails
    wrong = _write(
        tmp_path / "wrong.json",
        {"k": 3, "terminal_order": [0], "nodes": [[1], [2], [3]], "edges": [], "marks": None},
    )
    assert cli.main(["verify", g, "-k", "3", "--csg", wrong]) == cli.EXIT_MISMATCH
    payload = _payload(capsys)
    assert payload["ok"] is False
    rows = {row["name"]: row["ok"] for row in payload["checks"]}
    assert rows["labels"] and rows["(c)"] and not rows["isomorphism"]

    bad_label = _write(
        tmp_path / "bad.json",
        {"k": 3, "terminal_order": [0], "nodes": [[7]], "edges": [], "marks": None},
    )
    assert cli.main(["verify", g, "-k", "3", "--csg", bad_label]) == cli.EXIT_MISMATCH
    rows = {row["name"]: row["ok"] for row in _payload(capsys)["checks"]}
    assert not rows["labels"]

    assert cli.main(["verify", g, "-k", "4", "--csg", good]) == cli.EXIT_INPUT
    capsys.readouterr()
