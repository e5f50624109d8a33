#!/usr/bin/env python3
"""Regenerate the shipped family manifest from the live registry.

Writes src/polybraid/families.json; a test keeps the file in sync with
catalog.manifest_records().
"""

import json
import pathlib

from polybraid import catalog

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "polybraid" / "families.json"


def main() -> None:
    records = catalog.manifest_records()
    OUT.write_text(json.dumps(records, indent=2, sort_keys=True) + "\n")
    print(f"wrote {len(records)} family records to {OUT}")


if __name__ == "__main__":
    main()
