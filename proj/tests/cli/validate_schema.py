"""Runs every symvol command with --json and validates the documents."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["volume", "-g", "0", "-n", "3", "--json"],
    ["volume", "-g", "2", "-n", "1", "--json"],
    ["volume", "-g", "0", "-n", "4", "--eval", "3,4,5,6", "--approx", "--json"],
    ["intersect", "-g", "1", "-d", "1", "--json"],
    ["intersect", "-g", "1", "-d", "2", "--json"],
    ["correlator", "-g", "1", "-n", "2", "--json"],
    ["correlator", "-g", "0", "-n", "4", "--path", "both", "--json"],
    ["graphs", "-g", "0", "-n", "3", "--json"],
    ["graphs", "-g", "1", "-n", "1", "--trivalent", "--json"],
    ["verify", "-c", "2", "--json"],
]


def run(binary, args):
    result = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
    if result.returncode != 0:
        raise SystemExit(f"{' '.join(args)} exited {result.returncode}: {result.stderr}")
    return result.stdout


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft7Validator(schema)
    failures = 0
    for args in COMMANDS:
        first = run(binary, args)
        errors = sorted(validator.iter_errors(json.loads(first)), key=str)
        if errors:
            failures += 1
            print(f"FAIL {' '.join(args)}: {errors[0].message}")
            continue
        if run(binary, args) != first:
            failures += 1
            print(f"FAIL {' '.join(args)}: output differs between runs")
            continue
        print(f"ok   {' '.join(args)}")
    broken = {"kind": "volume", "metadata": {"g": 0, "n": 3, "version": "0.1.0"}, "payload": {"polynomial": 3}}
    if validator.is_valid(broken):
        failures += 1
        print("FAIL schema accepts a malformed payload")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
