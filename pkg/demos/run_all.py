#!/usr/bin/env python3
"""Run every uzspectra demo in its own interpreter.

Pass substrings on the command line to run only the demos whose file
names contain one of them. The exit code is the number of demos that
failed, capped at 1.
"""

from pathlib import Path
from subprocess import CalledProcessError, run
from sys import argv, executable, exit, stderr
from typing import List


def collect_demos(patterns: List[str]) -> List[Path]:
    """Demo scripts next to this file, filtered by name substrings."""
    demo_dir: Path = Path(__file__).parent
    return sorted(
        (
            f
            for f in demo_dir.glob("*.py")
            if f.is_file()
            and f.name not in {Path(__file__).name, "__init__.py"}
            and (not patterns or any(p in f.name for p in patterns))
        ),
        key=lambda x: x.name.lower(),
    )


def run_all_demos(patterns: List[str]) -> int:
    demo_files: List[Path] = collect_demos(patterns)
    if not demo_files:
        print(f"No demos match {patterns!r}", file=stderr)
        return 1

    failed: List[str] = []
    for file_path in demo_files:
        print("\n" + "=" * 79)
        print(f"Running demo: {file_path.name}")
        print("=" * 79 + "\n")
        try:
            run([executable, str(file_path)], check=True)
        except CalledProcessError as e:
            print(f"Demo {file_path.name} exited with {e.returncode}")
            failed.append(file_path.name)
    if failed:
        print(f"\nFailed: {', '.join(failed)}", file=stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    exit(run_all_demos(argv[1:]))
