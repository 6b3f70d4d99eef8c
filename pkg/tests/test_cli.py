import json

from theta_lab.cli import main

EX22_JOB = """
[ring]
vars = ["x", "y", "z"]
f = "x*y - z^2"

[modules.M]
kind = "ideal"
gens = ["x", "z"]

[[tasks]]
kind = "theta"
modules = ["M", "M"]
"""

NODE_JOB = """
[ring]
vars = ["x", "y"]
f = "x*y"
weights = ["1/2", "1/2"]

[modules.A]
kind = "ideal"
gens = ["x"]

[modules.B]
kind = "mf"
a = [["y"]]
b = [["x"]]

[[tasks]]
kind = "gram"
modules = ["A", "B"]

[[tasks]]
kind = "milnor"

[[tasks]]
kind = "residue"

[[tasks]]
kind = "spectrum"

[[tasks]]
kind = "intersection"
i = ["x"]
j = ["y"]

[[tasks]]
kind = "check-all"
"""

BAD_POLY_JOB = """
[ring]
vars = ["x", "y"]
f = "x**y"
"""


def run(tmp_path, capsys, text, *flags):
    job = tmp_path / "job.toml"
    job.write_text(text)
    code = main(["run", str(job), *flags])
    out = capsys.readouterr()
    return code, out.out, out.err


class TestRuns:
    def test_cone_self_pairing(self, tmp_path, capsys):
        code, out, _ = run(tmp_path, capsys, EX22_JOB)
        assert code == 0
        report = json.loads(out)
        task = report["tasks"][0]
        assert task["result"]["theta"] == "0"
        assert task["result"]["l_even"] == 1
        assert task["verdict"] == "pass"

    def test_node_suite(self, tmp_path, capsys):
        code, out, _ = run(tmp_path, capsys, NODE_JOB)
        assert code == 0
        report = json.loads(out)
        by_kind = {t["kind"]: t for t in report["tasks"]}
        assert by_kind["gram"]["result"]["matrix"] == [["-1", "1"],
                                                       ["1", "-1"]]
        assert by_kind["gram"]["result"]["psd"] is True
        assert by_kind["milnor"]["result"]["mu"] == 1
        assert by_kind["residue"]["result"]["matrix"] == [["-1"]]
        assert by_kind["intersection"]["result"]["multiplicity"] == 1
        assert any("ASSUMES_TOR_INDEPENDENCE" in n
                   for n in by_kind["intersection"]["notes"])
        assert all(v for v in by_kind["check-all"]["result"]["checks"].values())

    def test_report_schema(self, tmp_path, capsys):
        _, out, _ = run(tmp_path, capsys, EX22_JOB)
        report = json.loads(out)
        assert set(report) == {"tool_version", "ring", "f", "tasks"}
        assert report["ring"] == {"vars": ["x", "y", "z"]}
        for task in report["tasks"]:
            assert set(task) == {"name", "kind", "inputs", "result",
                                 "verdict", "notes"}

    def test_table_format(self, tmp_path, capsys):
        code, out, _ = run(tmp_path, capsys, NODE_JOB, "--format", "table")
        assert code == 0
        assert "[PASS]" in out and "{" not in out.splitlines()[0]

    def test_oracle_check(self, tmp_path, capsys):
        code, out, _ = run(tmp_path, capsys, EX22_JOB, "--oracle-check")
        assert code == 0
        task = json.loads(out)["tasks"][0]
        assert any("oracle agreement" in n for n in task["notes"])


class TestDeterminism:
    def test_byte_identical_reports(self, tmp_path, capsys):
        _, out1, _ = run(tmp_path, capsys, NODE_JOB)
        _, out2, _ = run(tmp_path, capsys, NODE_JOB)
        assert out1 == out2

    def test_threads_do_not_change_output(self, tmp_path, capsys):
        _, out1, _ = run(tmp_path, capsys, NODE_JOB)
        _, out2, _ = run(tmp_path, capsys, NODE_JOB, "--threads", "4")
        assert out1 == out2

    def test_no_floats_in_json(self, tmp_path, capsys):
        _, out, _ = run(tmp_path, capsys, NODE_JOB)

        def no_floats(v):
            if isinstance(v, float):
                return False
            if isinstance(v, dict):
                return all(no_floats(x) for x in v.values())
            if isinstance(v, list):
                return all(no_floats(x) for x in v)
            return True

        assert no_floats(json.loads(out))


class TestInputErrors:
    def test_malformed_polynomial(self, tmp_path, capsys):
        code, _, err = run(tmp_path, capsys, BAD_POLY_JOB)
        assert code == 2
        assert "position" in err

    def test_missing_file(self, capsys):
        code = main(["run", "/nonexistent/job.toml"])
        assert code == 2

    def test_invalid_toml(self, tmp_path, capsys):
        code, _, err = run(tmp_path, capsys, "[ring\nvars=")
        assert code == 2
        assert "TOML" in err

    def test_unknown_module_name(self, tmp_path, capsys):
        job = EX22_JOB.replace('modules = ["M", "M"]', 'modules = ["M", "Q"]')
        code, _, err = run(tmp_path, capsys, job)
        assert code == 2
        assert "Q" in err

    def test_unknown_task_kind(self, tmp_path, capsys):
        job = EX22_JOB.replace('kind = "theta"', 'kind = "frobnicate"')
        code, _, err = run(tmp_path, capsys, job)
        assert code == 2

    def test_invalid_mf_rejected(self, tmp_path, capsys):
        job = NODE_JOB.replace('b = [["x"]]', 'b = [["y"]]')
        code, _, err = run(tmp_path, capsys, job)
        assert code == 2
        assert "B" in err or "f*I" in err


class TestMathFailureExitCode:
    def test_degenerate_residue_reports_fail(self, tmp_path, capsys):
        # a valid isolated singularity never fails; force a fail verdict
        # through gram symmetry injection is not possible, so check that
        # verdicts drive the exit code via a crafted infinite-length task
        job = """
[ring]
vars = ["x", "y", "z"]
f = "x*y*z"

[modules.M]
kind = "mf"
a = [["x"]]
b = [["y*z"]]

[[tasks]]
kind = "theta"
modules = ["M", "M"]
"""
        code, out, _ = run(tmp_path, capsys, job)
        assert code == 1
        task = json.loads(out)["tasks"][0]
        assert task["verdict"] == "fail"
        assert "error" in task["result"]
