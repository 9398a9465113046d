import json
import subprocess
import sys

import jsonschema

exe, schema_path = sys.argv[1], sys.argv[2]
schema = json.load(open(schema_path))
invocations = [
    ["dual", "C1@n=2", "[2]"],
    ["dual", "G2@n=3", "G2"],
    ["dual", "D6@n=1", "[2,2,2,2,2,2]^I"],
    ["ap", "C2@n=2", "[4]"],
    ["ap", "A3@n=3", "[2,1,1]"],
    ["speh", "1", "2", "5", "6"],
    ["table", "query", "E7", "E7", "5"],
    ["table", "dump"],
    ["verify", "speh"],
]
for args in invocations:
    out = subprocess.run([exe, *args, "--json"], check=True, capture_output=True, text=True).stdout
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    again = subprocess.run([exe, *args, "--json"], check=True, capture_output=True, text=True).stdout
    assert out == again, f"non-deterministic output for {args}"
    print("ok", " ".join(args))
