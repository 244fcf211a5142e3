"""Run every acceptance criterion and print one PASS/FAIL line each.

    python3 scripts/run_acceptance.py [criterion ...]
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from tests import test_acceptance as acc  # noqa: E402


def main(argv):
    wanted = [int(a) for a in argv] or range(1, len(acc.CRITERIA) + 1)
    failed = 0
    for k in wanted:
        failed += not acc.CRITERIA[k - 1]()
        print(acc.RESULTS[k], flush=True)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
