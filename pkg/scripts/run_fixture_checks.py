#!/usr/bin/env python3
"""Run the axiom suites over every document in fixtures/ and print one
verdict line per file.  Parse failures are reported, not fatal."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from dpoisson.brackets import run_bracket_checks
from dpoisson.dlr import dlr_check
from dpoisson.textio import DocumentError, parse_document


def main() -> int:
    fixdir = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
    worst = 0
    for path in sorted(fixdir.glob("*.dbr")):
        try:
            doc = parse_document(path.read_text())
        except DocumentError as e:
            print(f"{path.name:24} PARSE ERROR  {e}")
            worst = max(worst, 2)
            continue
        verdicts = []
        for name, spec in doc.brackets.items():
            rep = run_bracket_checks(spec, max_len=3)
            verdicts.append((name, rep.ok))
        for name, data in doc.dlrs.items():
            rep = dlr_check(data, max_len=3)
            verdicts.append((name, rep.ok))
        if not verdicts:
            print(f"{path.name:24} nothing to check")
            continue
        body = "  ".join(f"{n}:{'PASS' if ok else 'FAIL'}" for n, ok in verdicts)
        print(f"{path.name:24} {body}")
        if not all(ok for _, ok in verdicts):
            worst = max(worst, 1)
    return worst


if __name__ == "__main__":
    sys.exit(main())
