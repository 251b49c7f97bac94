"""Validate a JSON document against a schema: validate_json.py SCHEMA DOCUMENT."""
import json
import sys

import jsonschema


def main() -> int:
    with open(sys.argv[1], encoding="utf-8") as f:
        schema = json.load(f)
    with open(sys.argv[2], encoding="utf-8") as f:
        document = json.load(f)
    jsonschema.validate(document, schema)
    print(f"{sys.argv[2]}: valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
