"""Command line interface.

    braidlk invariant --word "1 -1"
    braidlk family a --k 2
    braidlk slide --k 3 --trace slide3.jsonl
    braidlk distance --a "$(braidlk family a --k 1)" --b "" --max-len 16 --max-cost 6
    braidlk verify all --format csv

Exit codes: 0 ok, 1 usage error, 2 invalid word / non-knot closure,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .diagram import hat
from .invariant import big_g, i_lk, lower_bound
from .search import search_distance
from .rewrite import slide_schedule
from .verify import SUITES, quadratic, run_suite
from .words import WordError, format_word, make_family, parse_word

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3
FORMATS = ("human", "json", "csv", "jsonl")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    format: str = "human"
    out: str | None = None
    seed: int = 0
    trials: int = 500
    k: int | None = None
    k_max: int | None = None
    max_len: int | None = None
    max_cost: int | None = None
    n: int | None = None


GLOBAL_DEFAULTS = dict(format="human", out=None, seed=0, trials=500, k=None, k_max=None, max_len=None, max_cost=None, n=None)


def _add_global_flags(p):
    s = argparse.SUPPRESS
    p.add_argument("--format", choices=FORMATS, default=s)
    p.add_argument("--out", metavar="PATH", default=s)
    p.add_argument("--seed", type=int, default=s)
    p.add_argument("--trials", type=int, default=s)
    p.add_argument("--k", type=int, default=s)
    p.add_argument("--k-max", dest="k_max", type=int, default=s)
    p.add_argument("--max-len", dest="max_len", type=int, default=s)
    p.add_argument("--max-cost", dest="max_cost", type=int, default=s)
    p.add_argument("--n", type=int, default=s)


def _word_args(p, name, required=True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument(f"--{name}", metavar="TEXT", help="word as signed generator indices")
    g.add_argument(f"--{name}-file", dest=f"{name}_file", metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidlk", description="Braid relation counting via knot diagram invariants.")
    _add_global_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariant", help="I_lk and G of a B_3 word")
    _word_args(p, "word")
    _add_global_flags(p)

    p = sub.add_parser("family", help="print V, W, a_k or b_k")
    p.add_argument("kind", choices=("V", "W", "a", "b"))
    _add_global_flags(p)

    p = sub.add_parser("slide", help="the 4k^2 slide schedule from a_k to b_k")
    p.add_argument("--trace", metavar="PATH", help="write the step trace as JSONL")
    _add_global_flags(p)

    p = sub.add_parser("distance", help="lower bound and capped search for d(a, b)")
    _word_args(p, "a")
    _word_args(p, "b")
    p.add_argument("--no-lower-bound", dest="use_lower_bound", action="store_false")
    p.add_argument("--trace", metavar="PATH", help="write the witness trace as JSONL")
    _add_global_flags(p)

    p = sub.add_parser("verify", help="run acceptance checks")
    p.add_argument("suite", choices=sorted(SUITES))
    _add_global_flags(p)
    return parser


def _config(ns) -> RunConfig:
    opts = {k: getattr(ns, k, v) for k, v in GLOBAL_DEFAULTS.items()}
    return RunConfig(command=ns.command, **opts)


def _read_word(ns, name, n):
    text = getattr(ns, name)
    path = getattr(ns, f"{name}_file")
    if path is not None:
        try:
            text = Path(path).read_text()
        except OSError as e:
            raise WordError(f"cannot read {path}: {e}") from None
    return parse_word(text, n)


def _dump_jsonl(records) -> str:
    return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in records)


def _dump_csv(rows, columns) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _emit(cfg: RunConfig, text: str):
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def _structured(cfg: RunConfig, payload: dict, human: str) -> str:
    if cfg.format == "human":
        return human
    if cfg.format == "json":
        return json.dumps(payload, indent=2) + "\n"
    if cfg.format == "jsonl":
        return _dump_jsonl([payload])
    flat = {k: (json.dumps(v, separators=(",", ":")) if isinstance(v, (dict, list)) else v) for k, v in payload.items()}
    return _dump_csv([flat], list(flat))


# -- commands ------------------------------------------------------------------

def cmd_invariant(ns, cfg: RunConfig) -> int:
    w = _read_word(ns, "word", cfg.n or 3)
    value = i_lk(w)
    payload = {"word": format_word(w), "n": w.n, "i_lk": value.to_json()}
    human = f"word:  [{format_word(w)}]\nI_lk:  {value!r}\nI_lk json: {json.dumps(value.to_json())}\n"
    if w.n == 3:
        payload["G"] = big_g(w)
        human += f"G:     {payload['G']}\n"
    _emit(cfg, _structured(cfg, payload, human))
    return EXIT_OK


def cmd_family(ns, cfg: RunConfig) -> int:
    k = 1 if cfg.k is None else cfg.k
    if ns.kind in ("a", "b") and k < 1:
        raise UsageError(f"--k must be >= 1, got {k}")
    w = make_family(ns.kind, k)
    payload = {"kind": ns.kind, "k": k, "length": len(w), "word": format_word(w)}
    _emit(cfg, _structured(cfg, payload, format_word(w) + "\n"))
    return EXIT_OK


def cmd_slide(ns, cfg: RunConfig) -> int:
    k = 1 if cfg.k is None else cfg.k
    if k < 1:
        raise UsageError(f"--k must be >= 1, got {k}")
    trace = slide_schedule(k).with_g(big_g)
    g_start = big_g(trace.start)
    gs = [g_start] + [s.g for s in trace.steps]
    deltas = Counter(y - x for x, y in zip(gs, gs[1:]))
    expected = quadratic(k)
    final_ok = trace.final == make_family("b", k) and trace.replay()
    ok = final_ok and trace.type1_count == expected and set(deltas) == {-1}
    summary = {
        "k": k,
        "braid_moves": trace.type1_count,
        "expected": expected,
        "final_is_b_k": final_ok,
        "G_start": g_start,
        "G_end": gs[-1],
        "delta_G": {str(d): c for d, c in sorted(deltas.items())},
        "pass": ok,
    }
    if ns.trace:
        Path(ns.trace).write_text(_dump_jsonl(trace.records()))
    if cfg.format == "jsonl" and not ns.trace:
        text = _dump_jsonl(trace.records())
    else:
        hist = ", ".join(f"{d:+d} x{c}" for d, c in sorted(deltas.items()))
        human = (
            f"slide a_{k} -> b_{k}: {trace.type1_count} braid moves (4k^2 = {expected})\n"
            f"final word is b_{k}: {final_ok}\n"
            f"G: {g_start} -> {gs[-1]}; per-step delta G: {hist}\n"
            f"{'PASS' if ok else 'FAIL'}\n"
        )
        text = _structured(cfg, summary, human)
    _emit(cfg, text)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_distance(ns, cfg: RunConfig) -> int:
    a = _read_word(ns, "a", cfg.n)
    b = _read_word(ns, "b", cfg.n)
    if cfg.n is None and a.n != b.n:
        n = max(a.n, b.n, 3)
        a, b = parse_word(format_word(a), n), parse_word(format_word(b), n)
    if a.n != b.n:
        raise WordError(f"strand counts differ: {a.n} vs {b.n}")

    bound, bound_note = None, "disabled"
    if ns.use_lower_bound:
        if a.n != 3:
            bound_note = f"unavailable: G is defined for n=3, got n={a.n}"
        elif not (hat(a).knot and hat(b).knot):
            bound_note = "unavailable: closure is not a knot"
        else:
            bound = lower_bound(a, b)
            bound_note = str(bound)
    res = search_distance(a, b, cfg.max_len, cfg.max_cost, lower_bound=bound)
    if ns.trace and res.trace is not None:
        Path(ns.trace).write_text(_dump_jsonl(res.trace.records()))

    payload = {
        "a": format_word(a),
        "b": format_word(b),
        "n": a.n,
        "lower_bound": bound,
        "lower_bound_note": bound_note,
        "found": res.found,
        "upper": res.cost_upper,
        "certified_exact": res.certified_exact,
        "max_len": res.max_len,
        "max_cost": res.max_cost,
        "caveat": res.caveat,
        "steps": len(res.trace) if res.trace else None,
    }
    upper = res.cost_upper if res.found else "none found within caps"
    human = (
        f"lower bound |G(a)-G(b)|: {bound_note}\n"
        f"upper (search): {upper}\n"
        f"certified exact: {res.certified_exact}\n"
        f"note: {res.caveat}\n"
    )
    _emit(cfg, _structured(cfg, payload, human))
    return EXIT_OK


def cmd_verify(ns, cfg: RunConfig) -> int:
    results = run_suite(ns.suite, trials=cfg.trials, seed=cfg.seed, k_max=cfg.k_max)
    ok = all(r.passed for r in results)
    records = [r.record() for r in results]
    if cfg.format == "json":
        text = json.dumps({"suite": ns.suite, "seed": cfg.seed, "trials": cfg.trials, "passed": ok, "checks": records}, indent=2) + "\n"
    elif cfg.format == "jsonl":
        text = _dump_jsonl(records)
    elif cfg.format == "csv":
        sweep = [row for r in results if r.criterion == 1 for row in r.rows]
        if ns.suite == "family" and sweep:
            text = _dump_csv(sweep, ["k", "len_a", "G_a", "4k2", "pass"])
        else:
            text = _dump_csv(records, ["criterion", "name", "passed", "attempted", "passing", "detail"])
    else:
        lines = [f"{r.line()}  ({r.seconds:.2f}s)" for r in results]
        lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
        text = "\n".join(lines) + "\n"
    _emit(cfg, text)
    return EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {
    "invariant": cmd_invariant,
    "family": cmd_family,
    "slide": cmd_slide,
    "distance": cmd_distance,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:  # usage errors exit 1, --help exits 0
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    cfg = _config(ns)
    try:
        return COMMANDS[cfg.command](ns, cfg)
    except UsageError as e:
        print(f"braidlk: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except WordError as e:
        print(f"braidlk: invalid input: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
