#!/usr/bin/env python3
"""Validate a JSON document on stdin against a JSON schema file.

Usage: validate_json.py SCHEMA < document.json
Exit 0 when valid, 1 when invalid, 3 when the jsonschema package is missing.
"""

import json
import sys

try:
    import jsonschema
except ImportError:
    sys.exit(3)


def main():
    with open(sys.argv[1]) as f:
        schema = json.load(f)
    doc = json.load(sys.stdin)
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        print(e.message, file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
