import json

import pytest

from multidom import cycle, read_graph
from multidom.cli import main, parse_spec


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_spec_strings(tmp_path):
    assert parse_spec("classical").variant == "classical"
    assert parse_spec("kdom:2").k == 2
    assert parse_spec("ktuple:3").variant == "k_tuple"
    assert parse_spec("totalk:1").variant == "total_k"
    assert parse_spec("bracek:2").variant == "brace_k"
    s = parse_spec("param:2,3")
    assert (s.k, s.l) == (2, 3)
    rfile = tmp_path / "r.txt"
    sfile = tmp_path / "s.txt"
    rfile.write_text("1 1 1 1\n")
    sfile.write_text("2 2 2 2\n")
    spec = parse_spec(f"rs:{rfile},{sfile}")
    assert spec.variant == "rs" and spec.r == (1, 1, 1, 1)
    spec = parse_spec(f"totalrs:{rfile},{sfile}")
    assert spec.variant == "total_rs"
    with pytest.raises(ValueError):
        parse_spec("nonsense")
    with pytest.raises(ValueError):
        parse_spec("rs:only_one_file")


def test_gen_writes_and_round_trips(capsys, tmp_path):
    out = tmp_path / "c5.edges"
    code, _, _ = run_cli(capsys, "gen", "--family", "cycle", "--n", "5",
                         "--out", str(out))
    assert code == 0
    assert read_graph(out.read_text()) == cycle(5)
    code, text, _ = run_cli(capsys, "gen", "--family", "petersen", "--format", "dimacs")
    assert code == 0 and text.startswith("p edge 10 15")


def test_gen_deterministic(capsys):
    args = ("gen", "--family", "gnp", "--n", "20", "--p", "0.5", "--seed", "42")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_bounds_classical_on_c4(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--family", "cycle", "--n", "4",
                           "--spec", "classical", "--no-timestamp")
    assert code == 0
    payload = json.loads(out)
    by = {row["name"]: row for row in payload["bounds"]}
    assert by["caro_roditty"]["coefficient"] < by["classical"]["coefficient"]
    assert payload["graph"]["min_degree"] == 2


def test_bounds_ktuple_with_c_csv(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--family", "complete", "--n", "10",
                           "--spec", "ktuple:3", "--c", "3.0", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("name,applicable,")
    names = {line.split(",")[0] for line in lines[1:]}
    assert {"rv", "ktuple_threshold", "rs_strong"} <= names


def test_infeasible_spec_exits_2(capsys):
    code, _, err = run_cli(capsys, "bounds", "--family", "cycle", "--n", "4",
                           "--spec", "totalk:3")
    assert code == 2 and "infeasible" in err


def test_parse_error_exits_1(capsys, tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("0 x\n")
    code, _, err = run_cli(capsys, "exact", "--graph", str(bad), "--spec", "classical")
    assert code == 1 and "line 1" in err
    code, _, _ = run_cli(capsys, "bounds", "--family", "cycle", "--n", "4",
                         "--spec", "wat:7")
    assert code == 1
    code, _, _ = run_cli(capsys, "bounds", "--family", "nope", "--n", "4",
                         "--spec", "classical")
    assert code == 1  # argparse usage errors are parse errors


def test_missing_graph_is_error(capsys):
    code, _, err = run_cli(capsys, "bounds", "--spec", "classical")
    assert code == 1 and "graph is required" in err


def test_exact_param22_on_c4(capsys):
    code, out, _ = run_cli(capsys, "exact", "--family", "cycle", "--n", "4",
                           "--spec", "param:2,2", "--no-timestamp")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 3


def test_construct_verify_pipeline(capsys, tmp_path):
    gfile = tmp_path / "g.edges"
    run_cli(capsys, "gen", "--family", "gnp", "--n", "25", "--p", "0.4",
            "--seed", "5", "--out", str(gfile))
    cfile = tmp_path / "construct.json"
    code, _, _ = run_cli(capsys, "construct", "--graph", str(gfile),
                         "--spec", "ktuple:2", "--seed", "3", "--trials", "20",
                         "--no-timestamp", "--out", str(cfile))
    assert code == 0
    result = json.loads(cfile.read_text())
    wfile = tmp_path / "witness.json"
    wfile.write_text(json.dumps(result["witness"]))
    code, out, _ = run_cli(capsys, "verify", "--graph", str(gfile),
                           "--spec", "ktuple:2", "--witness", str(wfile),
                           "--no-timestamp")
    assert code == 0
    assert json.loads(out)["valid"] is True


def test_construct_function_spec(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "construct", "--family", "gnp", "--n", "20",
                           "--p", "0.4", "--seed", "1", "--spec", "bracek:2",
                           "--trials", "10", "--no-timestamp", "--trace")
    assert code == 0
    payload = json.loads(out)
    assert "values" in payload["witness"]
    assert len(payload["weight_trace"]) == payload["trials"]


def test_verify_invalid_witness_is_data_not_error(capsys, tmp_path):
    wfile = tmp_path / "w.json"
    wfile.write_text('{"set": [0]}')
    code, out, _ = run_cli(capsys, "verify", "--family", "cycle", "--n", "6",
                           "--spec", "classical", "--witness", str(wfile),
                           "--no-timestamp")
    assert code == 0
    payload = json.loads(out)
    assert payload["valid"] is False and payload["deficiencies"]


def test_verify_witness_shape_mismatch(capsys, tmp_path):
    wfile = tmp_path / "w.json"
    wfile.write_text('{"values": [1, 1, 1, 1]}')
    code, _, _ = run_cli(capsys, "verify", "--family", "cycle", "--n", "4",
                         "--spec", "classical", "--witness", str(wfile))
    assert code == 1


def test_construct_deterministic_output(capsys):
    args = ("construct", "--family", "gnp", "--n", "22", "--p", "0.4",
            "--seed", "7", "--spec", "param:2,2", "--trials", "15",
            "--no-timestamp")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_compare_csv_and_json(capsys):
    code, out, _ = run_cli(capsys, "compare", "5", "1000", "1", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,rv,c3,tuned_c,tuned_value,best"
    row5 = lines[5].split(",")
    assert float(row5[1]) < 0.035 and float(row5[4]) < 0.027
    code, out, _ = run_cli(capsys, "compare", "5", "1000", "1", "--no-timestamp")
    payload = json.loads(out)
    assert payload["rv_cutoff"] == 72 and payload["crossover_k"] == 9


def test_rs_spec_from_vector_files(capsys, tmp_path):
    rfile = tmp_path / "r.txt"
    sfile = tmp_path / "s.txt"
    rfile.write_text("2 2 2 2\n")
    sfile.write_text("2 2 2 2\n")
    code, out, _ = run_cli(capsys, "exact", "--family", "cycle", "--n", "4",
                           "--spec", f"rs:{rfile},{sfile}", "--no-timestamp")
    assert code == 0
    assert json.loads(out)["value"] == 3  # same as bracek:2 on C4


def test_timestamp_present_by_default(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--family", "cycle", "--n", "4",
                           "--spec", "classical")
    assert code == 0
    assert "generated_at" in json.loads(out)
