"""Validate CLI JSON reports against the shipped schema and check summary consistency."""

import json
import math
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

RUNS = [
    ["eig", "--n", "1", "--op", "intertwine", "--d", "2", "--jmax", "3", "--kmax", "0"],
    ["eig", "--n", "2", "--op", "fh-weighted", "--alpha", "1", "--jmax", "2", "--kmax", "2"],
    ["certify", "--n", "1,2", "--jmax", "6", "--kmax", "6"],
    ["certify", "--check", "all", "--n", "1", "--jmax", "3", "--kmax", "3"],
    ["certify", "--n", "1", "--jmax", "4", "--kmax", "4", "--rhs-scale", "0.99"],
    ["funk-hecke", "--n", "1", "--alpha", "0.6", "--jmax", "2", "--kmax", "2"],
    ["verify", "--ineq", "hls", "--n", "1", "--lambda", "1.5", "--samples", "2000"],
    ["verify", "--ineq", "onofri", "--n", "1", "--f", "const:0"],
    ["verify", "--ineq", "extremal-hls", "--n", "1", "--lambda", "2", "--zeta", "0.5,0", "--samples", "2000"],
    ["sample", "--n", "2", "--samples", "5"],
]


def check_summary(doc):
    entries = doc["entries"]
    s = doc["summary"]
    counts = {v: sum(e["verdict"] == v for e in entries) for v in ("holds_strict", "holds_equality", "violated")}
    assert s["total"] == len(entries), "total"
    for k, v in counts.items():
        assert s[k] == v, k
    slacks = [e["slack"] for e in entries if e["verdict"] != "holds_equality"]
    if slacks:
        assert math.isclose(s["min_slack"], min(slacks), rel_tol=0, abs_tol=0), "min_slack"
    else:
        assert s["min_slack"] is None, "min_slack without entries"
    for e in entries:
        slack, tol = e["slack"], e["tolerance"]
        expected = "holds_equality" if abs(slack) <= tol else ("violated" if slack < -tol else "holds_strict")
        assert e["verdict"] == expected, f"verdict of {e}"


def main():
    exe, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    with tempfile.TemporaryDirectory() as tmp:
        for i, args in enumerate(RUNS):
            out = Path(tmp) / f"r{i}.json"
            proc = subprocess.run([exe, *args, "--out", str(out)], capture_output=True, text=True)
            if proc.returncode not in (0, 1):
                print("FAIL", args, proc.returncode, proc.stderr)
                return 1
            doc = json.loads(out.read_text())
            errors = sorted(validator.iter_errors(doc), key=str)
            if errors:
                print("FAIL schema", args, errors[0].message)
                return 1
            check_summary(doc)
            print("ok", " ".join(args))
    return 0


if __name__ == "__main__":
    sys.exit(main())
