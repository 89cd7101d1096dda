"""Shared CSV loading for the figure scripts."""

import csv
import sys


def load_rows(path, required_columns):
    """Read a CSV with a header row; exit 2 if any required column is absent."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            header = reader.fieldnames or []
            missing = [c for c in required_columns if c not in header]
            if missing:
                print(
                    f"{path}: missing required column(s): {', '.join(missing)}",
                    file=sys.stderr,
                )
                sys.exit(2)
            return header, list(reader)
    except OSError as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        sys.exit(1)
