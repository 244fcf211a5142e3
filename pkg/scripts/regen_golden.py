"""Rewrite tests/data/golden/*.out from the current CLI.

Review the diff by hand before committing: goldens are only meaningful once checked.
"""

import contextlib
import io
import shlex
import sys
from pathlib import Path

from perfdigraphs.cli import run_command

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"


def load_cases():
    for line in (DATA / "golden" / "cases.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, code, argv = (part.strip() for part in line.split("|", 2))
        yield name, int(code), shlex.split(argv)


def main():
    with contextlib.chdir(DATA) if hasattr(contextlib, "chdir") else _chdir(DATA):
        for name, code, argv in load_cases():
            buf = io.StringIO()
            got = run_command(argv, buf)
            if got != code:
                print(f"{name}: exit {got}, table says {code}", file=sys.stderr)
            (DATA / "golden" / f"{name}.out").write_text(buf.getvalue())


@contextlib.contextmanager
def _chdir(path):
    import os

    old = os.getcwd()
    os.chdir(path)
    try:
        yield
    finally:
        os.chdir(old)


if __name__ == "__main__":
    main()
