import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from ttone import cli
from ttone.bounds import color_2tone_greedy
from ttone.coloring import PartialToneColoring, ToneParams, all_labels, parse_label
from ttone.errors import InternalInvariant, InvalidVertex, ParseError
from ttone.exact import ClaimCheck
from ttone.generators import complete, heawood, heawood_seven_coloring, path
from ttone.io import format_edge_list, parse_edge_list, read_coloring_json, write_coloring_json

# -- edge lists -------------------------------------------------------------


def test_parse_examples():
    assert parse_edge_list("3 2\n0 1\n1 2") == path(3)
    assert parse_edge_list("# comment\n2 1\n0 1") == complete(2)
    with pytest.raises(InvalidVertex):
        parse_edge_list("2 1\n0 5")


def test_parse_dedups_and_skips_blank_lines():
    g = parse_edge_list("\n3 3\n0 1\n\n1 0\n# note\n1 2\n")
    assert g.m == 2


@pytest.mark.parametrize(
    "text,line",
    [
        ("3 x\n", 1),
        ("3 1\n0\n", 2),
        ("# c\n3 1\n0 1 2\n", 3),
        ("3 1\n0 one\n", 2),
        ("-1 0\n", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_parse_count_mismatch_and_empty():
    with pytest.raises(ParseError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(ParseError):
        parse_edge_list("# nothing\n")


@given(graphs(max_n=12))
def test_edge_list_roundtrip(g):
    assert parse_edge_list(format_edge_list(g)) == g


# -- JSON -------------------------------------------------------------------


def test_json_k2_example():
    c = PartialToneColoring(ToneParams(2, 4), {0: parse_label("12"), 1: parse_label("34")})
    data = json.loads(write_coloring_json(c))
    assert data["t"] == 2 and data["k"] == 4
    assert data["labels"] == {"0": [1, 2], "1": [3, 4]}
    assert set(data) == {"t", "k", "labels", "algorithm", "used", "valid", "stats"}


def test_json_empty_graph():
    assert json.loads(write_coloring_json(PartialToneColoring.empty(2, 4)))["labels"] == {}


def test_json_report_fields_and_determinism():
    g = heawood()
    a = write_coloring_json(*color_2tone_greedy(g))
    b = write_coloring_json(*color_2tone_greedy(g))
    assert a == b
    data = json.loads(a)
    assert data["algorithm"] == "2tone-greedy" and data["valid"] is True
    assert "elapsed" not in data["stats"]
    assert list(data) == sorted(data)


@given(st.integers(1, 3), st.data())
def test_json_roundtrip(t, data):
    k = t + data.draw(st.integers(0, 12))
    n = data.draw(st.integers(0, 10))
    labels = {v: data.draw(st.sampled_from(all_labels(k, t))) for v in range(n)}
    c = PartialToneColoring(ToneParams(t, k), labels)
    assert read_coloring_json(write_coloring_json(c)) == c


def test_json_bad_input():
    with pytest.raises(ParseError):
        read_coloring_json('{"t": 2}')
    with pytest.raises(ParseError):
        read_coloring_json("not json")


# -- CLI --------------------------------------------------------------------


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_claims_check(capsys):
    code, out, _ = run(capsys, "claims-check")
    assert code == 0
    assert out.strip() == "6435 families checked, 0 counterexamples"


def test_exact_heawood(capsys):
    code, out, _ = run(capsys, "exact", "--gen", "heawood", "--kmax", "7")
    assert code == 0 and out.strip() == "7"
    code, out, _ = run(capsys, "exact", "--gen", "heawood", "--k", "6")
    assert code == 0 and out.startswith("absent")
    code, out, _ = run(capsys, "exact", "--gen", "complete:3", "--kmax", "5")
    assert code == 0 and "above cap" in out


def test_verify_ring_file(tmp_path, capsys):
    graph = tmp_path / "heawood.txt"
    graph.write_text(format_edge_list(heawood()))
    coloring = tmp_path / "ring.json"
    coloring.write_text(write_coloring_json(heawood_seven_coloring()))
    code, out, _ = run(capsys, "verify", str(graph), "--coloring", str(coloring))
    assert (code, out.strip()) == (0, "valid")


def test_verify_reports_violations(tmp_path, capsys):
    coloring = tmp_path / "bad.json"
    c = PartialToneColoring(ToneParams(2, 4), {0: parse_label("12"), 1: parse_label("12")})
    coloring.write_text(write_coloring_json(c))
    code, out, _ = run(capsys, "verify", "--gen", "path:3", "--coloring", str(coloring))
    assert code == cli.EXIT_INPUT
    assert "violation: 0 (12) and 1 (12) share 2 at distance 1" in out
    assert "uncolored: 2" in out and out.strip().endswith("invalid")


@pytest.mark.parametrize("algorithm", cli.ALGORITHMS)
def test_color_every_algorithm(algorithm, tmp_path, capsys):
    spec = "random:tree_with_max_degree:20:3" if algorithm == "tree" else "random:max_degree_r:20:3"
    if algorithm == "2tone-chordal":
        spec = "random:chordal:20:3"
    if algorithm == "2tone-bipartite":
        spec = "random:bipartite:20:3"
    out_a, out_b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (out_a, out_b):
        code, _, _ = run(capsys, "color", "--gen", spec, "--seed", "5", "--algorithm", algorithm, "--out", str(out))
        assert code == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    data = json.loads(out_a.read_text())
    assert data["valid"] is True and len(data["labels"]) == 20
    graph = tmp_path / "g.txt"
    run(capsys, "gen", "--gen", spec, "--seed", "5", "--out", str(graph))
    code, out, _ = run(capsys, "verify", str(graph), "--coloring", str(out_a))
    assert (code, out.strip()) == (0, "valid")


def test_color_stdout(capsys):
    code, out, _ = run(capsys, "color", "--gen", "petersen", "--algorithm", "cubic8")
    assert code == 0 and json.loads(out)["stats"]["budget"] == 8


def test_gen_stdout(capsys):
    code, out, _ = run(capsys, "gen", "--gen", "cycle:4")
    assert code == 0 and parse_edge_list(out).m == 4


def test_class_mismatch_exit_code(capsys):
    code, _, err = run(capsys, "color", "--gen", "cycle:4", "--algorithm", "2tone-chordal")
    assert code == cli.EXIT_CLASS == 2 and "error" in err
    assert run(capsys, "color", "--gen", "cycle:5", "--algorithm", "2tone-bipartite")[0] == 2
    assert run(capsys, "color", "--gen", "cycle:5", "--algorithm", "tree")[0] == 2
    assert run(capsys, "color", "--gen", "complete:5", "--algorithm", "cubic8")[0] == 2


def test_input_error_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n0 x\n")
    code, _, err = run(capsys, "color", str(bad))
    assert code == cli.EXIT_INPUT == 1 and "line 2" in err
    assert run(capsys, "color", str(tmp_path / "missing.txt"))[0] == 1
    assert run(capsys, "color", "--gen", "nonsense")[0] == 1
    assert run(capsys, "color", "--gen", "random:cubic:7:3")[0] == 1
    assert run(capsys, "color")[0] == 1
    assert run(capsys, "color", str(bad), "--gen", "petersen")[0] == 1


def test_timeout_exit_code(capsys):
    # the k=6 Heawood search needs several thousand nodes; the deadline is
    # checked every 1024, so a microsecond budget always expires
    code, out, _ = run(capsys, "exact", "--gen", "heawood", "--k", "6", "--timeout-secs", "0.000001")
    assert code == cli.EXIT_TIMEOUT == 3 and out.startswith("timeout")
    code, out, _ = run(capsys, "exact", "--gen", "heawood", "--kmax", "7", "--timeout-secs", "0.000001")
    assert code == 3
    assert run(capsys, "heawood-check", "--timeout-secs", "0.000001")[0] == 3


def test_nonpositive_timeout_rejected(capsys):
    with pytest.raises(SystemExit):
        cli.main(["exact", "--gen", "heawood", "--timeout-secs", "0"])


def test_internal_exit_code(monkeypatch, capsys):
    def boom(*_):
        raise InternalInvariant("simulated")

    monkeypatch.setattr(cli, "color_cubic_8", boom)
    code, _, err = run(capsys, "color", "--gen", "petersen", "--algorithm", "cubic8")
    assert code == cli.EXIT_INTERNAL == 4 and "simulated" in err
    monkeypatch.setattr(cli, "check_seven_label_claim", lambda: ClaimCheck(False, 10, (2, 4)))
    code, out, _ = run(capsys, "claims-check")
    assert code == 4 and "1 counterexamples" in out


def test_heawood_check(capsys):
    code, out, _ = run(capsys, "heawood-check")
    assert code == 0 and "Heawood tau_2 = 7" in out


def test_bounds_suite_cli(tmp_path, capsys):
    out = tmp_path / "suite.jsonl"
    code, _, err = run(capsys, "bounds-suite", "--instances", "5", "--seed", "3", "--out", str(out))
    assert code == 0 and "0 failures" in err
    first = out.read_bytes()
    run(capsys, "bounds-suite", "--instances", "5", "--seed", "3", "--out", str(out))
    assert out.read_bytes() == first
    records = [json.loads(line) for line in first.decode().splitlines()]
    assert len(records) == 5 * 7
    keys = [(r["algorithm"], r["id"]) for r in records]
    assert keys == sorted(keys)


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "ttone", "claims-check"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and "0 counterexamples" in proc.stdout
