"""Tabulate G(a_k), G(b_k), word lengths and slide-schedule size against 4k^2.

    python scripts/theorem_sweep.py --k-max 25 > sweep.csv
"""

import argparse
import csv
import sys
import time

from braidlk.invariant import big_g
from braidlk.rewrite import slide_schedule
from braidlk.words import make_family


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k-max", type=int, default=25)
    ap.add_argument("--slide-max", type=int, default=8, help="largest k for which the schedule is replayed")
    args = ap.parse_args()

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["k", "len_a", "G_a", "G_b", "4k2", "slide_moves", "seconds"])
    for k in range(1, args.k_max + 1):
        t0 = time.perf_counter()
        a, b = make_family("a", k), make_family("b", k)
        moves = slide_schedule(k).type1_count if k <= args.slide_max else ""
        out.writerow([k, len(a), big_g(a), big_g(b), 4 * k * k, moves, f"{time.perf_counter() - t0:.3f}"])


if __name__ == "__main__":
    main()
