#!/usr/bin/env python3
"""Run the full bounded classification and print timing plus shape counts.

Example:
    python scripts/run_classification.py --dim 4 --bound 64 --jobs 4
"""

from __future__ import annotations

import argparse
import time

from wblinks.classify import DEFAULT_BOUND, classify, default_jobs


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dim", type=int, default=4, choices=(3, 4))
    parser.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    parser.add_argument("--jobs", type=int, default=default_jobs())
    parser.add_argument(
        "--list", action="store_true", help="print every accepted tuple"
    )
    args = parser.parse_args()

    start = time.perf_counter()
    run = classify(args.dim, args.bound, jobs=args.jobs)
    elapsed = time.perf_counter() - start

    print(
        f"dim={run.dim} bound={run.bound} jobs={args.jobs} "
        f"total={len(run.accepted)} time={elapsed:.1f}s"
    )
    for shape, count in sorted(run.shape_counts.items()):
        print(f"  {shape}: {count}")
    if args.list:
        for ws in run.accepted:
            print(",".join(map(str, ws)))


if __name__ == "__main__":
    main()
