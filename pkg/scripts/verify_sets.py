"""Verify whole constructed sets with the overlap oracle and report timings.

    python scripts/verify_sets.py [--max-size 50000]
"""

import argparse
import time

from dyckmat.census import cardinality, in_domain
from dyckmat.overlap import verify_set
from dyckmat.setgen import SetSpec, enumerate_set


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--max-size", type=int, default=50000)
    p.add_argument("--m-max", type=int, default=8)
    p.add_argument("--n-max", type=int, default=12)
    args = p.parse_args()

    for n in range(4, args.n_max + 1):
        for m in range(2, args.m_max + 1):
            if not in_domain(m, n) or cardinality(m, n) > args.max_size:
                continue
            start = time.perf_counter()
            members = list(enumerate_set(SetSpec.default(m, n), limit=args.max_size))
            report = verify_set(members)
            print(
                f"{m:>2} x {n:<2} size={len(members):>6} pass={report.passed} "
                f"violations={len(report.violations)} {time.perf_counter() - start:.2f}s"
            )


if __name__ == "__main__":
    main()
