"""Runs the hlink binary, validates each JSON report against its schema and
checks that repeated invocations print identical bytes."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def main() -> int:
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text())
               for p in schema_dir.glob("*.schema.json")}
    for schema in schemas.values():
        jsonschema.Draft202012Validator.check_schema(schema)

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        g6 = str(pathlib.Path(tmp) / "k2p3.g6")
        cases = [
            ("instance", 0, ["construct", "--family", "k2p3-k5", "--param", "delta=5", "--out", g6]),
            ("instance", 0, ["construct", "--family", "lk2p3", "--param", "l=2", "--param", "delta=5"]),
            ("verify_report", 0, ["verify", "--family", "p4-k4", "--param", "delta=4"]),
            ("verify_report", 0, ["verify", "--family", "three-cliques-k3", "--param", "n=11"]),
            ("verify_report", 3, ["verify", "--family", "p4-k5", "--param", "delta=6", "--budget", "1000"]),
            ("bounds", 0, ["bounds", "--k", "7", "--pattern", "p4", "--n", "500"]),
            ("bounds", 0, ["bounds", "--k", "1", "--pattern", "3*k2", "--n", "50"]),
            ("bounds", 0, ["bounds", "--k", "1", "--pattern", "p3+p3", "--n", "50"]),
            ("delta_exact", 0, ["delta-exact", "--k", "2", "--pattern", "k3", "--n", "5"]),
            ("linkage", 0, ["linkage", "--graph", g6, "--witness"]),
            ("linkage", 0, ["linkage", "--graph", g6, "--pattern", "k2", "--map", "0,1"]),
            ("hlinked", 0, ["hlinked", "--graph", g6, "--pattern", "k2", "--threads", "1"]),
            ("connectivity", 0, ["connectivity", "--graph", g6]),
        ]
        for schema, expected_code, args in cases:
            runs = [subprocess.run([binary, *args], capture_output=True) for _ in range(2)]
            first = runs[0]
            label = " ".join(args)
            if first.returncode != expected_code:
                print(f"FAIL exit {first.returncode} != {expected_code}: {label}\n{first.stderr.decode()}")
                failures += 1
                continue
            if runs[1].stdout != first.stdout:
                print(f"FAIL output differs between runs: {label}")
                failures += 1
            try:
                jsonschema.validate(json.loads(first.stdout), schemas[schema])
            except (json.JSONDecodeError, jsonschema.ValidationError) as e:
                print(f"FAIL {schema}: {label}: {e}")
                failures += 1
                continue
            print(f"ok   {schema}: {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
