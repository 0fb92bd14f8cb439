"""Run the capped exact search on small pairs and compare with |G(a) - G(b)|.

Prints one line per pair; with ``--trace-dir`` the witness traces are written
as JSONL.
"""

import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from braidlk.diagram import hat
from braidlk.invariant import lower_bound
from braidlk.search import search_distance
from braidlk.words import V, W, BraidWord, empty, make_family


@dataclass
class Case:
    name: str
    a: BraidWord
    b: BraidWord
    max_len: int
    max_cost: int


CASES = [
    Case("a_1 -> E", make_family("a", 1), empty(3), 16, 6),
    Case("a_1 -> b_1", make_family("a", 1), make_family("b", 1), 14, 5),
    Case("VW -> WV", V + W, W + V, 10, 5),
    Case("a_1 -> E (wider)", make_family("a", 1), empty(3), 18, 6),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trace-dir", type=Path)
    args = ap.parse_args()
    for case in CASES:
        lb = lower_bound(case.a, case.b) if hat(case.a).knot and hat(case.b).knot else None
        t0 = time.perf_counter()
        res = search_distance(case.a, case.b, case.max_len, case.max_cost, lower_bound=lb)
        dt = time.perf_counter() - t0
        print(f"{case.name:20s} lower={lb} {res.summary()} [{res.explored} classes, {dt:.2f}s]")
        if args.trace_dir and res.trace is not None:
            args.trace_dir.mkdir(parents=True, exist_ok=True)
            path = args.trace_dir / (case.name.replace(" ", "_").replace(">", "") + ".jsonl")
            path.write_text("".join(json.dumps(r) + "\n" for r in res.trace.records()))


if __name__ == "__main__":
    main()
