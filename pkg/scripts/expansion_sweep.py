"""How often does a first row admit an extension string x?

For each n, scan every admissible first row and count the usable x strings.
First rows with zero candidates cannot be enlarged by the single-x Z matrix.

    python scripts/expansion_sweep.py [--n-min 4] [--n-max 12]
"""

import argparse

from dyckmat.expand import sweep_anchors


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--verbose", action="store_true")
    args = p.parse_args()

    print(f"{'n':>3} {'anchors':>8} {'no x':>6} {'min':>5} {'max':>5}")
    for n in range(max(4, args.n_min), args.n_max + 1):
        sweep = sweep_anchors(n)
        counts = [c for _, c in sweep]
        empty = [row for row, c in sweep if c == 0]
        print(f"{n:>3} {len(sweep):>8} {len(empty):>6} {min(counts):>5} {max(counts):>5}")
        if args.verbose and empty:
            print("    without x:", " ".join(empty))


if __name__ == "__main__":
    main()
