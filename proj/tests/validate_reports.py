"""Runs every CLI command and validates the JSON reports and the shipped problem files."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli, root = pathlib.Path(sys.argv[1]), pathlib.Path(sys.argv[2])
data = root / "data"
report_schema = json.loads((root / "docs" / "report.schema.json").read_text())
problem_schema = json.loads((root / "docs" / "problem.schema.json").read_text())

for f in sorted(data.glob("*.json")):
    jsonschema.validate(json.loads(f.read_text()), problem_schema)

four, single, smooth = str(data / "four_point.json"), str(data / "singleton.json"), str(data / "nonconvex2.json")
invocations = [
    (["certify", "--problem", four, "--point", "e1"], 1),
    (["certify", "--problem", four, "--point", "ones", "--mode", "weak"], 0),
    (["certify", "--problem", single, "--point", "only", "--s", "lower"], 0),
    (["frontier", "--problem", four, "--s", "upper"], 0),
    (["frontier", "--problem", four, "--s", "0.3"], 0),
    (["sweep", "--problem", four, "--mode", "weak"], 0),
    (["scalarize", "--problem", four, "--lambda", "1,1,1"], 0),
    (["scalarize", "--problem", four, "--lambda", "1,0,0"], 0),
    (["firstorder", "--problem", smooth, "--point", "g840", "--s", "selfdual"], 0),
    (["firstorder", "--problem", smooth, "--point", "g0"], 1),
    (["firstorder", "--problem", smooth, "--x", "0.3,0.5"], None),
    (["dualcheck", "--n", "4", "--samples", "200"], 0),
    (["dualcheck", "--problem", four, "--s", "lower", "--samples", "200"], 0),
]

failures = 0
with tempfile.TemporaryDirectory() as tmp:
    for args, expected in invocations:
        proc = subprocess.run([str(cli), *args], capture_output=True, text=True)
        try:
            if expected is not None and proc.returncode != expected:
                raise AssertionError(f"exit {proc.returncode}, expected {expected}: {proc.stderr}")
            jsonschema.validate(json.loads(proc.stdout), report_schema)
        except Exception as e:  # noqa: BLE001
            failures += 1
            print("FAIL", " ".join(args), e)
        else:
            print("ok  ", " ".join(args))

    proc = subprocess.run([str(cli), "certify", "--problem", four, "--point", "nope"], capture_output=True, text=True)
    err = json.loads(proc.stderr)
    if proc.returncode != 2 or err["error"]["kind"] != "unknown-id":
        failures += 1
        print("FAIL error envelope", proc.returncode, proc.stderr)

sys.exit(1 if failures else 0)
