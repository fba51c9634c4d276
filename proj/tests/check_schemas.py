#!/usr/bin/env python3
"""Validate the CLI's JSON output against the shipped schemas.

Usage: check_schemas.py <cagekit-binary> <schema-dir>
Exits 127 when jsonschema is unavailable (skipped in ctest).
"""
import json
import pathlib
import subprocess
import sys

try:
    from jsonschema import Draft202012Validator
    from jsonschema.exceptions import ValidationError
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(127)

CASES = [
    (["poly", "H", "--k", "3", "--i", "2"], "poly.schema.json"),
    (["poly", "F", "--k", "7", "--i", "9"], "poly.schema.json"),
    (["cyclotomic", "--l", "12"], "cyclotomic.schema.json"),
    (["cyclotomic", "--l", "2"], "cyclotomic.schema.json"),
    (["factor", "--coeffs", "[2,-12,0,1]"], "certificate.schema.json"),
    (["factor", "--coeffs", "[4,0,0,0,1]"], "certificate.schema.json"),
    (["factor", "--coeffs", "[-1,-12,0,1]"], "certificate.schema.json"),
    (["moore", "--k", "7", "--g", "6"], "moore.schema.json"),
    (["verify", "--graph", "pappus"], "verify-report.schema.json"),
    (["verify", "--graph", "petersen"], "verify-report.schema.json"),
    (["verify", "--graph6", "Cr"], "verify-report.schema.json"),
    (["excess-graph", "--graph", "mcgee"], "excess-graph.schema.json"),
    (["excess-graph", "--graph", "robertson"], "excess-graph.schema.json"),
    (["excess-graph", "--graph6", "Cr"], "excess-graph.schema.json"),
    (
        ["scan", "--k", "6..8", "--g", "8..12",
         "--scope", "general,cyclic,bicyclic,excess2"],
        "scan-report.schema.json",
    ),
]


def main():
    bin_path, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    validators = {}
    failures = 0
    for args, schema_name in CASES:
        if schema_name not in validators:
            schema = json.loads((schema_dir / schema_name).read_text())
            Draft202012Validator.check_schema(schema)
            validators[schema_name] = Draft202012Validator(schema)
        proc = subprocess.run(
            [bin_path, *args, "--format", "json"], capture_output=True, text=True
        )
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            validators[schema_name].validate(json.loads(proc.stdout))
            print(f"ok   {label}  ({schema_name})")
        except (ValidationError, json.JSONDecodeError) as err:
            print(f"FAIL {label}: {err}")
            failures += 1
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
