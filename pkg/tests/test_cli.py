import json
import subprocess
import sys

import pytest

CMD = [sys.executable, "-m", "grogweb"]


def run_cli(*args, **kwargs):
    return subprocess.run(
        CMD + list(args), capture_output=True, text=True, timeout=300, **kwargs
    )


@pytest.fixture
def web1_file(tmp_path):
    path = tmp_path / "web1.json"
    path.write_text(json.dumps({"n": 3, "arcs": [[1, 2], [2, 3]]}))
    return str(path)


class TestJacoCommand:
    def test_json(self):
        proc = run_cli("jaco", "--n", "5", "--format", "json")
        assert proc.returncode == 0
        obj = json.loads(proc.stdout)
        assert obj == {
            "n": 5,
            "arcs": [[1, 2], [2, 3], [3, 4], [3, 5], [4, 5]],
            "jaconian": 3,
        }

    def test_minimal_order(self):
        proc = run_cli("jaco", "--n", "2", "--format", "json")
        assert json.loads(proc.stdout)["arcs"] == [[1, 2]]

    def test_zero_is_usage_error(self):
        proc = run_cli("jaco", "--n", "0")
        assert proc.returncode == 2
        assert "error" in proc.stderr

    def test_dot(self):
        proc = run_cli("jaco", "--n", "2", "--format", "dot")
        assert proc.stdout == "digraph {\n  1;\n  2;\n  1 -> 2;\n}\n"

    def test_out_file(self, tmp_path):
        out = tmp_path / "j.json"
        proc = run_cli("jaco", "--n", "5", "--format", "json", "--out", str(out))
        assert proc.returncode == 0
        assert proc.stdout == ""
        assert json.loads(out.read_text())["jaconian"] == 3


class TestCompetitionCommand:
    def test_jaco_5(self):
        proc = run_cli("competition", "--jaco", "5", "--format", "json")
        assert json.loads(proc.stdout) == {
            "n": 5,
            "edges": [[3, 4]],
            "isolated": [1, 2, 5],
        }

    def test_closed_form_6(self):
        proc = run_cli("competition", "--jaco", "6", "--closed-form", "--format", "json")
        assert json.loads(proc.stdout)["edges"] == [[3, 4], [4, 5]]

    def test_check_40(self):
        proc = run_cli("competition", "--jaco", "40", "--check")
        assert proc.returncode == 0
        assert proc.stdout == "equal\n"

    def test_closed_form_below_domain(self):
        proc = run_cli("competition", "--jaco", "4", "--closed-form")
        assert proc.returncode == 2

    def test_file_input(self, tmp_path):
        path = tmp_path / "d.json"
        path.write_text(json.dumps({"n": 3, "arcs": [[1, 3], [2, 3]]}))
        proc = run_cli("competition", str(path), "--format", "json")
        assert json.loads(proc.stdout)["edges"] == [[1, 2]]

    def test_missing_input(self):
        proc = run_cli("competition")
        assert proc.returncode == 2


class TestGrogCommand:
    def test_solve(self, web1_file):
        proc = run_cli("grog", "solve", web1_file, "--format", "json")
        assert proc.returncode == 0
        obj = json.loads(proc.stdout)
        assert obj["grog"] == 2
        assert obj["max_predations"] == 2
        assert "witness" not in obj

    def test_solve_witness(self, web1_file):
        proc = run_cli("grog", "solve", web1_file, "--witness", "--format", "json")
        assert json.loads(proc.stdout)["witness"] == [
            {"predator": 1, "prey": [2]},
            {"predator": 2, "prey": [3]},
        ]

    def test_solve_jaco5(self, tmp_path):
        # jaco output carries an extra "jaconian" key the digraph reader ignores
        jaco = tmp_path / "j5.json"
        run_cli("jaco", "--n", "5", "--format", "json", "--out", str(jaco))
        proc = run_cli("grog", "solve", str(jaco), "--format", "json")
        assert json.loads(proc.stdout)["grog"] == 5

    def test_run_empty_strategy(self, web1_file, tmp_path):
        strategy = tmp_path / "empty.json"
        strategy.write_text("[]")
        proc = run_cli("grog", "run", web1_file, "--strategy", str(strategy), "--format", "json")
        assert json.loads(proc.stdout)["residual"] == 6

    def test_run_replay(self, web1_file, tmp_path):
        strategy = tmp_path / "s.json"
        strategy.write_text(json.dumps([
            {"predator": 2, "prey": [3]},
            {"predator": 1, "prey": [2]},
        ]))
        proc = run_cli("grog", "run", web1_file, "--strategy", str(strategy), "--format", "json")
        obj = json.loads(proc.stdout)
        assert obj["residual"] == 2 and obj["predation_count"] == 2

    def test_run_illegal_strategy(self, web1_file, tmp_path):
        strategy = tmp_path / "bad.json"
        strategy.write_text(json.dumps([
            {"predator": 2, "prey": [3]},
            {"predator": 2, "prey": [3]},
        ]))
        proc = run_cli("grog", "run", web1_file, "--strategy", str(strategy))
        assert proc.returncode == 1
        assert "step 1" in proc.stderr

    def test_solve_cap(self, web1_file):
        proc = run_cli("grog", "solve", web1_file, "--max-arcs", "1")
        assert proc.returncode == 2

    def test_bad_json(self, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text("{nope")
        proc = run_cli("grog", "solve", str(path))
        assert proc.returncode == 2


class TestEnumerateCommand:
    def test_example1_reproduction(self):
        proc = run_cli(
            "enumerate", "--graph", "path", "--n", "3",
            "--dedup", "--distribution", "--format", "json",
        )
        assert proc.returncode == 0
        obj = json.loads(proc.stdout)
        assert obj["web_count"] == 12
        assert obj["formula_count"] == 12
        assert obj["grog"] == 2
        assert obj["distribution"] == [
            {"residual": 2, "count": 8},
            {"residual": 4, "count": 4},
        ]
        assert all(w["greedy_count"] == 2 for w in obj["webs"])

    def test_csv(self):
        proc = run_cli(
            "enumerate", "--graph", "path", "--n", "3",
            "--dedup", "--distribution", "--format", "csv",
        )
        assert proc.stdout == "residual,count\n2,8\n4,4\n"

    def test_cycle(self):
        proc = run_cli("enumerate", "--graph", "cycle", "--n", "3", "--format", "json")
        assert json.loads(proc.stdout)["grog"] == 2

    def test_cap(self):
        proc = run_cli("enumerate", "--graph", "path", "--n", "9")
        assert proc.returncode == 2

    def test_file_base(self, tmp_path):
        path = tmp_path / "base.json"
        path.write_text(json.dumps({"n": 2, "edges": [[1, 2]]}))
        proc = run_cli("enumerate", "--graph", str(path), "--dedup", "--format", "json")
        obj = json.loads(proc.stdout)
        assert obj["web_count"] == 2 and obj["grog"] == 1

    def test_text_summary(self):
        proc = run_cli("enumerate", "--graph", "path", "--n", "3", "--dedup", "--distribution")
        assert "webs enumerated: 12" in proc.stdout
        assert "g(G) = 2" in proc.stdout
        assert "min 2, max 2" in proc.stdout


class TestVerifyCommand:
    def test_single_claim_cor25(self):
        proc = run_cli("verify", "--claim", "cor-2.5", "--n-max", "6", "--format", "json")
        assert proc.returncode == 0
        obj = json.loads(proc.stdout)
        claim = obj["claims"][0]
        assert claim["id"] == "cor-2.5"
        assert claim["status"] == "pass"
        assert claim["values"]["g"] == {"3": 2, "4": 4, "5": 7, "6": 11}

    def test_unknown_claim(self):
        proc = run_cli("verify", "--claim", "nosuch")
        assert proc.returncode == 2
        assert "unknown claim" in proc.stderr

    def test_below_domain_is_skipped(self):
        proc = run_cli("verify", "--claim", "cor-2.5", "--n-max", "2", "--format", "json")
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["claims"][0]["status"] == "skipped"

    def test_divergence_claim_fails_honestly(self):
        proc = run_cli("verify", "--claim", "thm-2.6", "--format", "json")
        assert proc.returncode == 1
        claim = json.loads(proc.stdout)["claims"][0]
        assert claim["status"] == "fail"
        assert {f["base"] for f in claim["failures"]} == {"C3", "C4", "K4"}

    def test_report_only_claim_exits_zero(self):
        proc = run_cli("verify", "--claim", "cor-2.8", "--format", "json")
        assert proc.returncode == 0
        claim = json.loads(proc.stdout)["claims"][0]
        assert claim["values"]["cycle_minus_path"] == {"3": 0, "4": 0, "5": 0, "6": 0}

    def test_single_claim_determinism(self):
        a = run_cli("verify", "--claim", "lemma-2.2", "--seed", "7", "--format", "json")
        b = run_cli("verify", "--claim", "lemma-2.2", "--seed", "7", "--format", "json")
        assert a.stdout == b.stdout

    def test_out_file_with_summary(self, tmp_path):
        out = tmp_path / "report.json"
        proc = run_cli("verify", "--claim", "web-count", "--out", str(out))
        assert proc.returncode == 0
        assert "web-count" in proc.stdout
        assert json.loads(out.read_text())["claims"][0]["id"] == "web-count"
