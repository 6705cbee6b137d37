#!/usr/bin/env python3
"""Regenerate the frozen golden certificates under tests/golden/.

Run only after re-verifying the expected values in tests/golden_cases.py by
hand; the acceptance suite byte-compares against these files.
"""

import io
import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "tests"))

from golden_cases import CASES  # noqa: E402

from semistable_gate import cli  # noqa: E402


def certificate_text(command: str, doc: dict) -> str:
    old_stdin, old_stdout = sys.stdin, sys.stdout
    sys.stdin = io.StringIO(json.dumps(doc))
    sys.stdout = io.StringIO()
    try:
        code = cli.main([command])
        out = sys.stdout.getvalue()
    finally:
        sys.stdin, sys.stdout = old_stdin, old_stdout
    if code != 0:
        raise RuntimeError(f"{command} exited {code}")
    return out


def main() -> None:
    golden_dir = pathlib.Path(__file__).resolve().parents[1] / "tests" / "golden"
    golden_dir.mkdir(exist_ok=True)
    for name, command, doc, _ in CASES:
        path = golden_dir / f"{name}.json"
        path.write_text(certificate_text(command, doc), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
