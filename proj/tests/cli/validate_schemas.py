#!/usr/bin/env python3
"""Run the CLI with --json and check outputs against the schema and exit codes."""

import json
import subprocess
import sys

import jsonschema

RATDYN, SCHEMA = sys.argv[1], sys.argv[2]

with open(SCHEMA) as f:
    schema = json.load(f)


def validator(name):
    sub = {"$ref": f"#/$defs/{name}", "$defs": schema["$defs"]}
    return jsonschema.Draft202012Validator(sub)


# (arguments, schema definition, expected exit status)
CASES = [
    (["apply", "--op", "F", "--expr", "x^4/(x^7-1)"], "apply", 0),
    (["apply", "--op", "T2", "--expr", "1/(1-x)^2", "--iterations", "3"], "apply", 0),
    (["apply", "--op", "E", "--expr", "1/2 * x^-1 + 1"], "apply", 0),
    (["orbit", "--expr", "1/(x^7-1)", "--max-steps", "10"], "orbit", 0),
    (["orbit", "--expr", "x^5/(x^7-1)", "--max-steps", "10"], "orbit", 0),
    (["depth", "--expr", "x^3 + x", "--max-n", "6"], "depth", 0),
    (["decompose", "--expr", "x^6/(x^7-1)", "--n", "2"], "decompose", 0),
    (["gamma", "--m", "7", "--j", "4"], "gamma_value", 0),
    (["gamma", "--m", "7", "--j", "13"], "gamma_value", 0),
    (["gamma", "--m", "15", "--orbits"], "gamma_orbits", 0),
    (["gamma", "--m", "21", "--verify-congruence", "--p-max", "8"], "gamma_congruence", 0),
    (["euler", "--m", "4"], "euler", 0),
    (["limit", "--moduli", "3,5"], "limit", 0),
    (["limit", "--moduli", "3,9", "--j", "2"], "limit", 0),
    (["limit", "--moduli", "3,9", "--j", "1", "--q", "1"], "limit", 0),
    (["converge", "--moduli", "3,5", "--j", "2", "--p-max", "6", "--window", "10"], "converge", 0),
    (["converge", "--moduli", "3,9", "--j", "1", "--p-max", "6", "--window", "10"], "converge", 0),
    (["fixed-basis", "--r-max", "7"], "fixed_basis", 0),
    (["fixed-decompose", "--expr", "x^6/(x^7-1)", "--order-bound", "20"], "fixed_decompose", 0),
    (["fixed-decompose", "--expr", "1/x + 1/(1-x)", "--order-bound", "5"], "fixed_decompose", 0),
    (["verify", "--suite", "congruence"], "verify", 0),
    (["verify", "--suite", "orbits"], "verify", 0),
]

# (arguments, expected error kind, expected exit status)
ERRORS = [
    (["apply", "--op", "F", "--expr", "x^(1/2)"], "ExponentNotInteger", 2),
    (["apply", "--op", "F", "--expr", "x^6/(x^7-"], "SyntaxError", 2),
    (["apply", "--op", "F", "--expr", "1/(x-x)"], "ZeroDenominator", 2),
    (["apply", "--op", "Q", "--expr", "x"], "UsageError", 2),
    (["gamma", "--m", "8", "--j", "1"], "InvalidArgument", 2),
    (["depth", "--expr", "x/(1-x^2)", "--max-n", "4"], "NotWithinBound", 1),
    (["orbit", "--expr", "1/(1-x)^2", "--max-steps", "5"], "NotWithinBound", 1),
    (["limit", "--moduli", "3,9"], "WrongGcd", 2),
    (["limit", "--moduli", "3,9", "--j", "1", "--q", "5"], "ResidueOutOfRange", 2),
    (["fixed-decompose", "--expr", "1/(1-x)^2", "--order-bound", "5"], "MultiplePoles", 2),
    (["fixed-decompose", "--expr", "1/(1-2*x)", "--order-bound", "5"], "PolesNotRootsOfUnity", 2),
    (["fixed-decompose", "--expr", "x/(1-x^2)", "--order-bound", "5"], "NotFixed", 2),
    (["verify", "--suite", "nothing"], "UsageError", 2),
]


def run(args):
    return subprocess.run([RATDYN, "--json", *args], capture_output=True, text=True, timeout=600)


failures = []
for args, name, status in CASES:
    p = run(args)
    if p.returncode != status:
        failures.append(f"{args}: exit {p.returncode}, expected {status}: {p.stderr.strip()}")
        continue
    try:
        validator(name).validate(json.loads(p.stdout))
        jsonschema.Draft202012Validator(schema).validate(json.loads(p.stdout))
    except (ValueError, jsonschema.ValidationError) as e:
        failures.append(f"{args}: {e}")

for args, kind, status in ERRORS:
    p = run(args)
    if p.returncode != status:
        failures.append(f"{args}: exit {p.returncode}, expected {status}")
        continue
    try:
        err = json.loads(p.stderr.strip().splitlines()[-1])
        validator("error").validate(err)
    except (ValueError, IndexError, jsonschema.ValidationError) as e:
        failures.append(f"{args}: bad error report: {e}")
        continue
    if err["error"] != kind:
        failures.append(f"{args}: error {err['error']}, expected {kind}")
    if kind in ("SyntaxError", "ExponentNotInteger") and "position" not in err:
        failures.append(f"{args}: syntax error without position")

for f in failures:
    print("FAIL", f)
print(f"{len(CASES) + len(ERRORS) - len(failures)}/{len(CASES) + len(ERRORS)} CLI cases passed")
sys.exit(1 if failures else 0)
