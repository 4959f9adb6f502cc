"""Regenerate the shipped scenario files from the catalog builders.

    PYTHONPATH=src python3 tools/build_scenarios.py
"""

import json
from pathlib import Path

from dpverify.catalog import TYPE_IDS, document
from dpverify.scenario import file_stem

OUT = Path(__file__).resolve().parents[1] / "src" / "dpverify" / "scenarios"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for t in TYPE_IDS:
        path = OUT / f"{file_stem(t)}.json"
        path.write_text(json.dumps(document(t), indent=1) + "\n")
        print(path.name)


if __name__ == "__main__":
    main()
