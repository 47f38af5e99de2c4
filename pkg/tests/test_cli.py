import csv
import io
import json

import pytest

from wblinks.cli import main


def run_cli(argv):
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


def run_json(argv):
    code, text = run_cli(argv)
    return code, json.loads(text)


class TestCheck:
    def test_cqs_with_index(self):
        code, doc = run_json(["check", "-w", "1,14,13,10", "-r", "7"])
        assert code == 0
        assert doc["schema_version"] == "1"
        assert doc["result"]["terminal_cqs"] is True

    def test_weak_fano_verdict(self):
        code, doc = run_json(["check", "-w", "1,1,3"])
        assert code == 0
        assert doc["result"]["weak_fano"] == "weak_not_fano"

    def test_blowup_terminality(self):
        code, doc = run_json(["check", "-w", "2,3,5"])
        assert code == 0
        assert doc["result"]["blowup_terminal"] is False

    def test_signed_list_skips_blowup_fields(self):
        code, doc = run_json(["check", "--weights=-1,-1,2,3"])
        assert code == 0
        assert doc["result"]["wps_terminal"] is False
        assert doc["result"]["blowup_terminal"] is None

    def test_bad_token_exits_2(self, capsys):
        code, _ = run_cli(["check", "-w", "1,x,3"])
        assert code == 2
        assert "'x'" in capsys.readouterr().err

    def test_bad_index_exits_2(self):
        code, _ = run_cli(["check", "-w", "1,2", "-r", "0"])
        assert code == 2


class TestLink:
    def test_accepted(self):
        code, doc = run_json(["link", "-w", "1,2,5", "--dim", "3"])
        assert code == 0
        result = doc["result"]
        assert result["accepted"] is True
        assert result["end"]["kind"] == "divisorial_contraction"
        assert result["end"]["target_weights"] == [1, 3, 4, 5]

    def test_rejected_is_exit_zero(self):
        code, doc = run_json(["link", "-w", "1,3,4", "--dim", "3"])
        assert code == 0
        result = doc["result"]
        assert result["accepted"] is False
        assert result["rejection"]["stage"] == "wall_not_terminal"
        assert result["rejection"]["wall"] == 1

    def test_flop_then_fibration(self):
        code, doc = run_json(["link", "-w", "1,1,2,2", "--dim", "4"])
        assert code == 0
        result = doc["result"]
        assert result["accepted"] is True
        assert result["steps"][0]["flip_weights"] == [-1, -1, 0, 1, 1]
        assert result["end"] == {
            "kind": "fibration",
            "base_dim": 1,
            "fiber_weights": [1, 1, 1, 2],
        }

    def test_unsorted_input_echoed_and_canonicalized(self):
        code, doc = run_json(["link", "-w", "5,1,2", "--dim", "3"])
        assert code == 0
        assert doc["inputs"]["weights"] == [5, 1, 2]
        assert doc["result"]["weights_sorted"] == [1, 2, 5]

    def test_length_mismatch_exits_2(self):
        code, _ = run_cli(["link", "-w", "1,2", "--dim", "3"])
        assert code == 2

    def test_byte_identical_result(self):
        docs = [run_json(["link", "-w", "1,2,5", "--dim", "3"])[1] for _ in range(2)]
        assert json.dumps(docs[0]["result"], sort_keys=True) == json.dumps(
            docs[1]["result"], sort_keys=True
        )


class TestClassify:
    def test_expect_pass(self):
        code, doc = run_json(
            ["classify", "--dim", "3", "--bound", "64", "--expect", "4"]
        )
        assert code == 0
        assert doc["result"]["total"] == 4
        assert doc["result"]["accepted"] == [
            [1, 1, 1],
            [1, 1, 2],
            [1, 2, 3],
            [1, 2, 5],
        ]

    def test_expect_mismatch_exits_3(self, capsys):
        code, _ = run_cli(["classify", "--dim", "3", "--bound", "64", "--expect", "5"])
        assert code == 3
        capsys.readouterr()

    def test_csv_format(self):
        code, text = run_cli(["classify", "--dim", "3", "--bound", "64", "--format", "csv"])
        assert code == 0
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == ["weights", "end_kind", "target"]
        assert ["1:2:5", "divisorial_contraction", "1:3:4:5"] in rows

    def test_csv_json_same_accepted_set(self):
        _, text = run_cli(["classify", "--dim", "3", "--bound", "64", "--format", "csv"])
        csv_set = {
            tuple(int(x) for x in row[0].split(":"))
            for row in list(csv.reader(io.StringIO(text)))[1:]
        }
        _, doc = run_json(["classify", "--dim", "3", "--bound", "64"])
        json_set = {tuple(ws) for ws in doc["result"]["accepted"]}
        assert csv_set == json_set

    def test_out_file(self, tmp_path):
        target = tmp_path / "p3.csv"
        code, doc = run_json(
            ["classify", "--dim", "3", "--bound", "64", "--format", "csv",
             "--out", str(target)]
        )
        assert code == 0
        rows = list(csv.reader(target.open()))
        assert rows[0] == ["weights", "end_kind", "target"]
        assert doc["result"]["total"] == 4

    def test_out_dir_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("WBLINKS_OUT_DIR", str(tmp_path))
        code, _ = run_json(
            ["classify", "--dim", "3", "--bound", "16", "--format", "csv",
             "--out", "rel.csv"]
        )
        assert code == 0
        assert (tmp_path / "rel.csv").exists()

    def test_stabilize_flag(self):
        code, doc = run_json(
            ["classify", "--dim", "3", "--bound", "16", "--stabilize"]
        )
        assert code == 0
        assert doc["result"]["stabilized"] is True

    def test_table_format(self):
        code, text = run_cli(["classify", "--dim", "3", "--bound", "64", "--format", "table"])
        assert code == 0
        assert "total=4" in text
        assert "(1,2,5)" in text


class TestReport:
    def test_dim3_summary_table(self):
        code, text = run_cli(["report", "--dim", "3", "--bound", "64"])
        assert code == 0
        assert "| (1,1,1) |  | Fibration | P^1-bundle over P^2 |" in text
        assert "| (1,1,2) |  | Divisorial Contraction to P^1 | P(1,1,1,2) |" in text
        assert (
            "| (1,2,3) | (1,1,-1,-2) | (1,1,2)-Weighted blowup of a smooth point "
            "| P(1,1,2,3) |" in text
        )
        assert (
            "| (1,2,5) | (1,1,-1,-4) | Kawamata blowup of 1/3(1,1,2) "
            "| P(1,3,4,5) |" in text
        )

    def test_dim4_rows_carry_weights_only(self):
        code, text = run_cli(["report", "--dim", "4", "--bound", "6"])
        assert code == 0
        assert "Kawamata" not in text
        assert "| (2,3,5,5) |" in text
        assert "P(1,2,3,5)-fibration over P^1" in text


def test_unknown_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--dim", "3", "--frobnicate"])
    assert exc.value.code == 2
