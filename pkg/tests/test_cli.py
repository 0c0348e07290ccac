import json

import pytest

from cmkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.strip().splitlines()]


def test_cf_json(capsys):
    code, out, _ = run_cli(capsys, "cf", "9", "2")
    assert code == 0
    (obj,) = json_lines(out)
    assert obj == {"schema": "cmkit/1", "command": "cf", "p": 9, "q": 2, "cf": [5, 2]}


def test_cf_more_examples(capsys):
    code, out, _ = run_cli(capsys, "cf", "7", "5")
    assert json_lines(out)[0]["cf"] == [2, 2, 3]
    code, out, _ = run_cli(capsys, "cf", "5", "1")
    assert json_lines(out)[0]["cf"] == [5]


def test_cf_bad_input_exit_two(capsys):
    code, _, err = run_cli(capsys, "cf", "4", "2")
    assert code == 2
    assert "error" in err


def test_cf_csv(capsys):
    code, out, _ = run_cli(capsys, "cf", "9", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["p,q,cf", "9,2,5 2"]


def test_torsion_json(capsys):
    code, out, _ = run_cli(capsys, "torsion", "1", "2", "2")
    assert code == 0
    (obj,) = json_lines(out)
    assert obj["g"] == 2 and obj["p"] == 9 and obj["t"] == [1, 1, 0]


def test_torsion_unknot(capsys):
    code, out, _ = run_cli(capsys, "torsion", "1", "1")
    (obj,) = json_lines(out)
    assert obj["g"] == 0 and obj["p"] == 2 and obj["t"] == [0]


def test_torsion_witness_forced_value(capsys):
    code, out, _ = run_cli(capsys, "torsion", "1", "1", "3")
    (obj,) = json_lines(out)
    assert obj["t"][2] == 1 and obj["t"][3] == 0


def test_torsion_rejects_non_changemaker(capsys):
    code, _, err = run_cli(capsys, "torsion", "1", "3")
    assert code == 2
    code, _, err = run_cli(capsys, "torsion", "0", "1")
    assert code == 2


def test_gram_linear(capsys):
    code, out, _ = run_cli(capsys, "gram", "--linear", "9", "2")
    (obj,) = json_lines(out)
    assert obj["gram"] == [[-5, 1], [1, -2]]


def test_gram_sigma_standard_shape(capsys):
    code, out, _ = run_cli(capsys, "gram", "1", "1", "1", "2")
    (obj,) = json_lines(out)
    assert obj["gram"] == [[-2, 1, 0], [1, -2, 1], [0, 1, -3]]


def test_gram_sigma_general(capsys):
    code, out, _ = run_cli(capsys, "gram", "1", "1", "3")
    (obj,) = json_lines(out)
    assert len(obj["gram"]) == 2


def test_gram_csv(capsys):
    code, out, _ = run_cli(capsys, "gram", "--linear", "7", "5", "--format", "csv")
    assert out.splitlines() == ["-2,1,0", "1,-2,1", "0,1,-3"]


def test_census_json_stream(capsys):
    code, out, _ = run_cli(capsys, "census", "--max-rank", "2")
    assert code == 0
    lines = json_lines(out)
    assert lines[0]["kind"] == "header" and lines[0]["schema"] == "cmkit/1"
    records = [l for l in lines if l["kind"] == "record"]
    summary = lines[-1]
    assert summary["kind"] == "summary"
    assert summary["records"] == len(records) == 8
    assert summary["lemma5_holds"] and summary["theorem1_holds"]
    assert records[0]["sigma"] == [1, 1]


def test_census_filter_and_quiet(capsys):
    code, out, _ = run_cli(capsys, "census", "--max-rank", "3", "--sigma-n", "2", "--quiet")
    lines = json_lines(out)
    kinds = {l["kind"] for l in lines}
    assert kinds == {"header", "summary"}
    assert lines[-1]["records"] == 6


def test_census_empty(capsys):
    code, out, _ = run_cli(capsys, "census", "--max-rank", "0")
    assert code == 0
    lines = json_lines(out)
    assert lines[-1]["records"] == 0


def test_census_capacity_exit_three(capsys):
    code, _, err = run_cli(capsys, "census", "--max-rank", "11")
    assert code == 3


def test_census_byte_stable(capsys):
    _, first, _ = run_cli(capsys, "census", "--max-rank", "3")
    _, second, _ = run_cli(capsys, "census", "--max-rank", "3")
    assert first == second


def test_census_csv(capsys):
    code, out, _ = run_cli(capsys, "census", "--max-rank", "2", "--format", "csv")
    lines = out.splitlines()
    assert lines[0].startswith("rank,sigma,p,g,k,classification")
    assert any(line.startswith("# records=8") for line in lines)
    data = [line for line in lines if not line.startswith("#") and not line.startswith("rank,")]
    assert len(data) == 8


def test_census_out_file(tmp_path, capsys):
    target = tmp_path / "census.jsonl"
    code, out, _ = run_cli(capsys, "census", "--max-rank", "2", "--out", str(target))
    assert code == 0
    assert out == ""
    lines = [json.loads(line) for line in target.read_text().splitlines()]
    assert lines[-1]["records"] == 8


def test_verify_cli_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "lemma5", "--max-rank", "4")
    assert code == 0
    lines = json_lines(out)
    verdict = lines[-1]
    assert verdict["kind"] == "verdict"
    assert verdict["holds"] is True
    assert verdict["counterexamples"] == []
    instances = [l for l in lines if l["kind"] == "instance"]
    assert len(instances) == verdict["instances"]


def test_verify_quiet(capsys):
    code, out, _ = run_cli(capsys, "verify", "lemma4", "--max-rank", "1", "--quiet")
    assert code == 0
    lines = json_lines(out)
    assert [l["kind"] for l in lines] == ["header", "verdict"]
    assert lines[-1]["instances"] == 0


def test_verify_capacity_exit_three(capsys):
    code, _, _ = run_cli(capsys, "verify", "lemma4", "--max-rank", "9")
    assert code == 3


def test_verify_rejects_unknown_claim(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "lemma6", "--max-rank", "3"])
    assert exc.value.code == 2


def test_missing_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
