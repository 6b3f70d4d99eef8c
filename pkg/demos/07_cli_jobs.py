"""Batch verification through the job runner.

Jobs are declarative TOML files; the runner emits JSON (exact rationals
as strings) or a table, and its exit code distinguishes mathematical
failures (1) from input errors (2).
"""

import tempfile
from pathlib import Path

from theta_lab.cli import main

JOB = """
[ring]
vars = ["x", "y"]
f = "x*y"
weights = ["1/2", "1/2"]

[modules.A]
kind = "ideal"
gens = ["x"]

[modules.B]
kind = "ideal"
gens = ["y"]

[[tasks]]
kind = "gram"
modules = ["A", "B"]

[[tasks]]
kind = "check-all"
"""

with tempfile.TemporaryDirectory() as tmp:
    job = Path(tmp) / "node.toml"
    job.write_text(JOB)
    print("== table output ==")
    code = main(["run", str(job), "--format", "table"])
    print("exit code:", code)
    print("\n== same job with the truncation-oracle cross-check ==")
    code = main(["run", str(job), "--format", "table", "--oracle-check"])
    print("exit code:", code)
