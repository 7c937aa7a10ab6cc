#!/usr/bin/env python3
"""Runs every CLI command with --json and validates the output against docs/schema."""
import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("support", ["support", "ER(1)"], 0),
    ("support", ["support", "norm[S(3)](tEF[triv]@C(2))"], 0),
    ("relation", ["equal", "S0@C(2)", "pt@C(2)"], 1),
    ("relation", ["leq", "pt@C(2)", "S0@C(2)"], 0),
    ("relation", ["acyclic", "EF[triv]@C(2)", "tEF[triv]@C(2)"], 0),
    ("smashing", ["smashing", "ind[C(2)](E(1))"], 1),
    ("smashing", ["smashing", "ind[C(4)](E(0))"], 0),
    ("smashing", ["smashing", "ind[S(3)](tEF[triv]@C(2))"], 1),
    ("localize", ["localize", "EG(3,1)"], 0),
    ("locals", ["locals", "norm[S(3)](tEF[triv]@C(2))"], 0),
    ("locals", ["locals", "ind[C(4)](S0@C(2))"], 0),
    ("fixclass", ["fixclass", "ER(2)", "--ring"], 0),
    ("ideals-enumerate", ["ideals", "enumerate", "--n", "2", "--max", "2"], 0),
    ("ideals-construct", ["ideals", "construct", "2,1,1"], 0),
    ("ideals-verify", ["ideals", "verify", "1,0"], 0),
    ("ninfty-coinduce", ["ninfty", "coinduce", "--group", "S(4)", "--sub", "e"], 0),
    ("ninfty-coinduce", ["ninfty", "coinduce", "--group", "C(4)", "--sub", "(1,3)(2,4)"], 0),
    ("ninfty-closure", ["ninfty", "closure", "--expr", "tEF[triv]@C(2)", "--admissible", "complete"], 1),
    ("ninfty-closure", ["ninfty", "closure", "--expr", "S0@C(4)", "--admissible", "complete"], 0),
    ("ninfty-propagate", ["ninfty", "propagate", "--expr", "EG(2,1)"], 0),
    ("selftest", ["selftest"], 0),
    ("error", ["ideals", "verify", "3,1"], 2),
    ("error", ["support", "ind[C(4)](E(1)"], 2),
    ("error", ["ninfty", "propagate", "--expr", "ind[C(4)](S0@C(2))"], 2),
]


def main():
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for name, args, code in CASES:
        schema = json.loads((schema_dir / f"{name}.json").read_text())
        proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True)
        label = " ".join(args)
        try:
            if proc.returncode != code:
                raise AssertionError(f"exit {proc.returncode}, expected {code}")
            jsonschema.validate(json.loads(proc.stdout), schema)
        except (AssertionError, json.JSONDecodeError, jsonschema.ValidationError) as e:
            failures += 1
            print(f"FAIL {label}: {e}")
            continue
        print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
