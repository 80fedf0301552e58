"""Solve the exported MPS of the hand instance with HiGHS and compare objectives.

Usage: mps_crosscheck.py PREPOS_BINARY INSTANCE_JSON
Exit 77 (skip) when highspy is not installed.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

try:
    import highspy
except ImportError:
    print("highspy not installed; skipping")
    sys.exit(77)

EXPECTED = 162.5


def main() -> int:
    binary, instance = sys.argv[1], sys.argv[2]
    with tempfile.TemporaryDirectory() as tmp:
        mps = Path(tmp) / "hand.mps"
        run = subprocess.run([binary, "solve", instance, "--mps", str(mps)], capture_output=True, text=True)
        if run.returncode != 0:
            print(run.stderr)
            return 1
        ours = json.loads(run.stdout)["objective"]

        h = highspy.Highs()
        h.setOptionValue("output_flag", False)
        h.readModel(str(mps))
        h.run()
        theirs = h.getInfo().objective_function_value

    print(f"prepos {ours!r}  highs {theirs!r}")
    ok = abs(theirs - EXPECTED) <= 1e-5 and abs(ours - EXPECTED) <= 1e-5
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
