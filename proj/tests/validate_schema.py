"""Validate CLI JSON outputs against schema/fgfc-output.schema.json."""
import json
import subprocess
import sys

import jsonschema

binary, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)

runs = [
    ["--ring", "Z", "--ideal", "6"],
    ["--ring", "Q", "--ideal", "x^2 - 1; x^3 - x", "--trace", "--verify"],
    ["--ideal", "preset:opex(2,2)", "--verify", "--trace"],
    ["--ideal", "preset:glued(3,1)", "--limit", "3", "--verify"],
    ["--corpus", "field-fp", "--trials", "5"],
    ["--corpus", "fitting-z", "--trials", "5"],
    ["--ring", "Fp(4)", "--ideal", "x"],
    ["--ring", "Q", "--ideal", "x^2 + 1; y^2 - 2", "--vars", "x,y"],
]
failed = 0
for args in runs:
    proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True)
    try:
        validator.validate(json.loads(proc.stdout))
        print("ok  ", " ".join(args))
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failed += 1
        print("FAIL", " ".join(args), "->", str(e).splitlines()[0])
sys.exit(1 if failed else 0)
