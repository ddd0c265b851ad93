#!/usr/bin/env python3
"""Validates every CLI command's --json output against the shipped envelope schema.

Usage: cli_contract.py <cobfilt-binary> <envelope.schema.json>
Exits non-zero on the first contract violation.
"""
import json
import subprocess
import sys

import jsonschema

# (argv, expected exit status)
CASES = [
    (["decompose", "5"], 0),
    (["decompose", "2"], 0),
    (["decompose", "7"], 2),
    (["decompose", "1"], 2),
    (["recipe", "6", "--expand"], 0),
    (["recipe", "10", "--expand"], 0),
    (["recipe", "13"], 0),
    (["recipe", "3"], 2),
    (["table", "16"], 0),
    (["table", "2"], 0),
    (["table", "1"], 0),
    (["series", "homotopy", "--stage", "1,1,0", "--cap", "6"], 0),
    (["series", "homology", "--stage", "2,0,1", "--cap", "20"], 0),
    (["series", "steenrod", "--cap", "6"], 0),
    (["series", "homotopy", "--stage", "1,0,0", "--cap", "3"], 0),
    (["verify", "--check", "all", "--cap", "64"], 0),
    (["verify", "--check", "product", "--cap", "8"], 0),
    (["verify", "--check", "bijection", "--cap", "2"], 0),
    (["verify", "--check", "quotients", "--cap", "16"], 0),
    (["verify", "--check", "simple-system", "--cap", "32"], 0),
]


def keys_sorted(node):
    if isinstance(node, dict):
        keys = list(node.keys())
        return keys == sorted(keys) and all(keys_sorted(v) for v in node.values())
    if isinstance(node, list):
        return all(keys_sorted(v) for v in node)
    return True


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    # The schema must reject malformed envelopes too.
    broken = [
        {"command": "decompose", "parameters": {"degree": 5}, "status": "ok"},
        {"command": "decompose", "parameters": {"degree": 5}, "status": "ok",
         "result": {"degree": 5, "n": 1, "j": 1, "i": 1},
         "error": {"code": "X", "message": "both"}},
        {"command": "verify", "parameters": {"check": "bijection", "cap": 8}, "status": "ok",
         "result": {"passed": False, "checks": [{"check": "bijection", "bound": 8, "status": "fail"}]}},
        {"command": "series", "parameters": {"what": "homotopy", "cap": 2}, "status": "ok",
         "result": {"series": [1, -1, 0]}},
    ]
    failures = 0
    for doc in broken:
        if validator.is_valid(doc):
            print(f"FAIL schema accepted a malformed envelope: {json.dumps(doc)}")
            failures += 1

    for argv, want in CASES:
        full = [binary] + argv + ["--json"]
        first = subprocess.run(full, capture_output=True)
        second = subprocess.run(full, capture_output=True)
        label = " ".join(argv)
        if first.returncode != want:
            print(f"FAIL {label}: exit {first.returncode}, expected {want}")
            failures += 1
            continue
        if first.stdout != second.stdout:
            print(f"FAIL {label}: output is not deterministic")
            failures += 1
            continue
        doc = json.loads(first.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
            failures += 1
            continue
        if not keys_sorted(doc):
            print(f"FAIL {label}: keys are not sorted")
            failures += 1
            continue
        print(f"ok   {label}")

    # Usage errors never produce a JSON envelope.
    for argv in (["decompose", "abc"], ["series", "homotopy", "--stage", "1,0,2"], ["verify", "--cap", "1"]):
        r = subprocess.run([binary] + argv + ["--json"], capture_output=True)
        if r.returncode != 64 or r.stdout:
            print(f"FAIL {' '.join(argv)}: expected usage exit 64 with empty stdout, got {r.returncode}")
            failures += 1
        else:
            print(f"ok   {' '.join(argv)} (usage)")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
