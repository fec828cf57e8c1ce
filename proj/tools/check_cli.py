#!/usr/bin/env python3
"""Runs the CLI on the sample specs: exit codes, schema validity of every JSON
output, and byte-identical reruns."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

ROOT = pathlib.Path(__file__).resolve().parent.parent
SCHEMAS = ROOT / "schemas"
GROUPS = ROOT / "data" / "groups"


def registry():
    resources = []
    for p in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(p.read_text())
        resources.append((p.name, Resource.from_contents(doc)))
    return Registry().with_resources(resources)


REG = registry()


def validate(doc, schema_name):
    schema = json.loads((SCHEMAS / schema_name).read_text())
    jsonschema.Draft202012Validator(schema, registry=REG).validate(doc)


def g(name):
    return str(GROUPS / name)


# (args, expected exit code, schema for stdout or None, stdout format)
CASES = [
    (["analyze", g("sym4.json")], 0, "analyze.schema.json"),
    (["analyze", g("gl2_3.json")], 0, "analyze.schema.json"),
    (["analyze", g("q8.json")], 0, "analyze.schema.json"),
    (["analyze", g("sl2_3_x_f3sq_q8.json")], 0, "analyze.schema.json"),
    (["analyze", g("znz.json"), "--max-elements", "5000"], 2, None),
    (["analyze", g("bad_field.json")], 1, None),
    (["mu", g("f3sq_q8.json"), "--check"], 0, "mu.schema.json"),
    (["mu", g("sym4.json")], 0, "mu.schema.json"),
    (["bounds", "--n", "2"], 0, "bounds.schema.json"),
    (["bounds", "--n", "9", "--p", "2", "--kind", "irreducible"], 0, "bounds.schema.json"),
    (["bounds", "--n", "0"], 1, None),
    (["verify-cases", "--quick"], 0, "verify_cases.schema.json"),
    (["growth", g("znz.json"), "--radius", "0"], 0, "csv"),
    (["growth", g("znz.json"), "--radius", "12", "--format", "json", "--fit"], 0,
     "growth.schema.json"),
    (["growth", g("sanov.json"), "--radius", "12", "--max-elements", "1000"], 2, "csv"),
    (["growth", g("heisenberg.json"), "--radius", "8", "--format", "json"], 0,
     "growth.schema.json"),
    (["certify", g("sym4.json"), "--emit-transcript"], 0, "certificate.schema.json"),
    (["certify", g("f2cube_c7.json")], 0, "certificate.schema.json"),
    (["certify", g("f3sq_q8.json")], 0, "certificate.schema.json"),
    (["certify", g("sym4.json"), "--normal", g("sym4_v4.json")], 0, "certificate.schema.json"),
    (["certify", g("q8.json")], 1, None),
    (["frobnicate"], 1, None),
]


def run(binary, args, env=None):
    p = subprocess.run([binary, *args], capture_output=True, env=env)
    return p.returncode, p.stdout


def main():
    binary = sys.argv[1]
    failures = 0
    for args, want_rc, schema in CASES:
        label = " ".join(a.replace(str(GROUPS) + "/", "") for a in args)
        rc, out = run(binary, args)
        rc2, out2 = run(binary, args)
        problems = []
        if rc != want_rc:
            problems.append(f"exit {rc}, want {want_rc}")
        if (rc, out) != (rc2, out2):
            problems.append("rerun differs")
        if schema == "csv":
            lines = out.decode().splitlines()
            if lines[0] != "radius,gamma":
                problems.append("bad csv header")
            if args[1:4] == [g("znz.json"), "--radius", "0"] and lines[1:] != ["0,1"]:
                problems.append("radius 0 must be the single row 0,1")
            if rc == 2 and not lines[-1].startswith("# truncated"):
                problems.append("truncated csv is not flagged")
        elif schema:
            try:
                validate(json.loads(out), schema)
            except Exception as e:  # noqa: BLE001
                problems.append(f"schema: {e}")
        if problems:
            failures += 1
            print(f"FAIL {label}: {'; '.join(problems)}")
        else:
            print(f"ok   {label}")

    # the fit record file and the memory cap variable
    with tempfile.TemporaryDirectory() as d:
        fit = pathlib.Path(d) / "fit.json"
        rc, _ = run(binary, ["growth", g("znz.json"), "--radius", "20", "--fit",
                             "--fit-output", str(fit)])
        try:
            validate(json.loads(fit.read_text()), "growth_fit.schema.json")
            assert rc == 0
            print("ok   growth --fit-output")
        except Exception as e:  # noqa: BLE001
            failures += 1
            print(f"FAIL growth --fit-output: {e}")
    env = {"SOLGROWTH_MEMORY_CAP": "4K", "PATH": "/usr/bin:/bin"}
    rc, out = run(binary, ["growth", g("znz.json"), "--radius", "25"], env)
    if rc == 2 and out.decode().splitlines()[-1].startswith("# truncated"):
        print("ok   SOLGROWTH_MEMORY_CAP")
    else:
        failures += 1
        print(f"FAIL SOLGROWTH_MEMORY_CAP: exit {rc}")

    # every sample spec validates against the spec schema
    for p in sorted(GROUPS.glob("*.json")):
        try:
            validate(json.loads(p.read_text()), "group_spec.schema.json")
            ok = p.name != "bad_field.json"
        except jsonschema.ValidationError:
            ok = p.name == "bad_field.json"
        if not ok:
            failures += 1
            print(f"FAIL spec schema {p.name}")
    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
