#!/usr/bin/env python3
"""CLI-level checks for haantjes-lab: schema, golden regression, determinism and exit codes.

usage: check_report.py MODE --lab BIN --schema SCHEMA [--golden FILE] [--update]
"""
import argparse
import json
import os
import re
import subprocess
import sys
import tempfile

import jsonschema

NUMBER = re.compile(r"[-+]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][-+]?\d+)?")


def run(lab, args, cwd):
    return subprocess.run([lab] + args, cwd=cwd, capture_output=True, text=True)


def report(lab, args, cwd):
    proc = run(lab, args + ["--json", "report.json", "--quiet"], cwd)
    if not os.path.exists(os.path.join(cwd, "report.json")):
        raise SystemExit(f"{' '.join(args)}: no report (exit {proc.returncode}): {proc.stderr.strip()}")
    with open(os.path.join(cwd, "report.json"), "rb") as f:
        raw = f.read()
    return proc.returncode, raw


def close(a, b, rel=1e-6, floor=1e-12):
    if a is None or b is None:
        return a is b
    return abs(a - b) <= max(rel * max(abs(a), abs(b)), floor)


def residual_close(a, b, threshold):
    # residuals far below the threshold are rounding noise; compare only their side of the threshold
    if a is None or b is None:
        return a is b
    if threshold and a <= 1e-3 * threshold and b <= 1e-3 * threshold:
        return True
    return close(a, b, rel=1e-4)


def notes_close(x, y):
    if NUMBER.sub("#", x) != NUMBER.sub("#", y):
        return False
    xs, ys = (list(map(float, NUMBER.findall(s))) for s in (x, y))
    return all(close(u, v, rel=1e-4, floor=1e-9) for u, v in zip(xs, ys))


def compare(got, want):
    errors = []
    for key in ("tool_version", "system", "seed", "samples", "tol", "pass"):
        if got[key] != want[key]:
            errors.append(f"{key}: {got[key]!r} != {want[key]!r}")
    if len(got["claims"]) != len(want["claims"]):
        errors.append(f"claim count {len(got['claims'])} != {len(want['claims'])}")
        return errors
    for g, w in zip(got["claims"], want["claims"]):
        tag = f"claim {w['id']} ({w['claim']})"
        for key in ("id", "claim", "kind", "pass", "satisfied", "error", "expect_fail", "informational",
                    "samples", "failed_samples", "threshold"):
            if g[key] != w[key]:
                errors.append(f"{tag}: {key} {g[key]!r} != {w[key]!r}")
        if not residual_close(g["residual"], w["residual"], w["threshold"]):
            errors.append(f"{tag}: residual {g['residual']!r} != {w['residual']!r}")
        if len(g["notes"]) != len(w["notes"]) or not all(map(notes_close, g["notes"], w["notes"])):
            errors.append(f"{tag}: notes {g['notes']!r} != {w['notes']!r}")
        if set(g["values"]) != set(w["values"]):
            errors.append(f"{tag}: value keys differ")
        else:
            for k in w["values"]:
                if not residual_close(g["values"][k], w["values"][k], w["threshold"]):
                    errors.append(f"{tag}: value {k} {g['values'][k]!r} != {w['values'][k]!r}")
    return errors


def strip_wall_time(raw):
    doc = json.loads(raw)
    doc.pop("wall_time")
    return json.dumps(doc, sort_keys=False)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("mode", choices=["golden", "determinism", "schema", "exit-codes"])
    ap.add_argument("--lab", required=True)
    ap.add_argument("--schema", required=True)
    ap.add_argument("--golden")
    ap.add_argument("--data")
    ap.add_argument("--update", action="store_true")
    a = ap.parse_args()
    a.lab = os.path.abspath(a.lab)
    with open(a.schema) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    failures = []

    if a.mode == "golden":
        with tempfile.TemporaryDirectory() as d:
            code, raw = report(a.lab, ["verify", "drach-holt", "--seed", "42"], d)
        got = json.loads(raw)
        jsonschema.validate(got, schema)
        if code != 0:
            failures.append(f"exit code {code}")
        if a.update:
            with open(a.golden, "wb") as f:
                f.write(raw)
        with open(a.golden) as f:
            want = json.load(f)
        failures += compare(got, want)

    elif a.mode == "determinism":
        raws = []
        for _ in range(2):
            with tempfile.TemporaryDirectory() as d:
                raws.append(report(a.lab, ["verify", "drach-holt", "--seed", "7"], d)[1])
        if strip_wall_time(raws[0]) != strip_wall_time(raws[1]):
            failures.append("reports differ apart from wall_time")
        if re.sub(rb'"wall_time": [^\n]*', b"", raws[0]) != re.sub(rb'"wall_time": [^\n]*', b"", raws[1]):
            failures.append("reports are not byte-identical apart from wall_time")

    elif a.mode == "schema":
        runs = [["verify", name] for name in run(a.lab, ["list"], ".").stdout.split()]
        runs += [
            ["torsion", "--system", "sw1", "--operator", "K3", "--kind", "nijenhuis"],
            ["chain", "--system", "drach-holt", "--from", "H1", "--to", "H2", "--operator", "KDH"],
            ["fit-chain", "--system", "drach-holt", "--from", "H1", "--to", "H2", "--basis",
             os.path.join(a.data, "dh_basis.txt")],
            ["lift", "--a", os.path.join(a.data, "lift_general.def"), "--h", "q1*q2"],
            ["lift", "--a", os.path.join(a.data, "lift_nijenhuis.def")],
            ["spectrum", "--system", "aniso-rosochatius", "--operator", "K2"],
        ]
        for args in runs:
            with tempfile.TemporaryDirectory() as d:
                code, raw = report(a.lab, args + ["--samples", "40"], d)
            try:
                jsonschema.validate(json.loads(raw), schema)
            except jsonschema.ValidationError as e:
                failures.append(f"{' '.join(args)}: {e.message}")
            if code not in (0, 1):
                failures.append(f"{' '.join(args)}: exit code {code}")

    else:
        cases = [
            (["list"], 0),
            (["torsion", "--file", "missing.def", "--operator", "K"], 2),
            (["verify", "no-such-system"], 2),
            (["verify", "drach-holt", "--samples", "0"], 2),
            (["torsion", "--system", "drach-holt", "--operator", "KDH", "--kind", "nijenhuis"], 1),
            (["torsion", "--system", "drach-holt", "--operator", "KDH"], 0),
            (["frobnicate"], 2),
        ]
        with tempfile.TemporaryDirectory() as d:
            for args, want in cases:
                got = run(a.lab, args + ["--quiet"] if args[0] not in ("list", "frobnicate") else args, d)
                if got.returncode != want:
                    failures.append(f"{' '.join(args)}: exit {got.returncode}, expected {want}")
                if want == 2 and not got.stderr.strip():
                    failures.append(f"{' '.join(args)}: no message on standard error")
            listed = run(a.lab, ["list"], d).stdout.split()
            if len(listed) != 9:
                failures.append(f"list printed {len(listed)} systems")

    for msg in failures:
        print("FAIL:", msg)
    print(f"{a.mode}: {'ok' if not failures else f'{len(failures)} failure(s)'}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
