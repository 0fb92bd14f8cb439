"""Verification sweeps reproducing the quadratic lower bound end to end.

Each check returns a :class:`CheckResult`; the CLI ``verify`` command and the
acceptance tests both run these.  Randomized checks are reproducible from
``(seed, trials)``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .diagram import hat, pinning_lk, smooth_all
from .invariant import (
    FreeAbelianValue,
    MATCHED_RII,
    RIII_X,
    RIII_Y,
    ZERO,
    big_g,
    classify_delta,
    g_hom,
    i_lk,
    closed_form_difference,
)
from .rewrite import BRAID, CANCEL, COMMUTE, INSERT, NEG_POS, POS_NEG, apply_move, applicable_moves, insert, slide_schedule
from .search import search_distance
from .words import BraidWord, V, W, empty, format_word, make_family, parse_word, permutation, power


@dataclass
class CheckResult:
    criterion: int
    name: str
    passed: bool
    attempted: int
    passing: int
    detail: str = ""
    seconds: float = 0.0
    rows: list[dict] = field(default_factory=list)

    def record(self) -> dict:
        """Deterministic fields only (no timing)."""
        return {
            "criterion": self.criterion,
            "name": self.name,
            "passed": self.passed,
            "attempted": self.attempted,
            "passing": self.passing,
            "detail": self.detail,
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.criterion}. {self.name}: {self.passing}/{self.attempted} {self.detail}".rstrip()


def _timed(fn):
    def run(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def quadratic(k: int) -> int:
    return 4 * k * k


def w_block_positions(kind: str, k: int, i: int) -> list[int]:
    """1-based letter positions of the i-th W inside the W^k segment of a_k / b_k."""
    start = 6 * k if kind == "a" else 4 * k
    first = start + 4 * (i - 1) + 1
    return list(range(first, first + 4))


def expected_block_lk(kind: str, k: int, i: int) -> list[int]:
    if kind == "a":
        return [i - 2 * k - 1, 2 * k + 1 - i, 2 * k + 1 - i, i - 2 * k]
    return [i - k - 1, k - i + 1, k - i + 1, i - k]


# -- deterministic checks ----------------------------------------------------

@_timed
def check_theorem(k_max: int = 25) -> CheckResult:
    """G(a_k) = 4k^2, G(b_k) = 0 and |a_k| = |b_k| = 12k."""
    ok = 0
    rows = []
    for k in range(1, k_max + 1):
        a, b = make_family("a", k), make_family("b", k)
        ga, gb = big_g(a), big_g(b)
        good = len(a) == 12 * k and len(b) == 12 * k and ga == quadratic(k) and gb == 0
        ok += good
        rows.append({"k": k, "len_a": len(a), "G_a": ga, "4k2": quadratic(k), "pass": good})
    return CheckResult(1, "theorem lower bound G(a_k)=4k^2, G(b_k)=0", ok == k_max, k_max, ok, f"k=1..{k_max}", rows=rows)


@_timed
def check_formula(k_max: int = 10) -> CheckResult:
    ok = 0
    for k in range(1, k_max + 1):
        diff = i_lk(make_family("a", k)) - i_lk(make_family("b", k))
        ok += diff == closed_form_difference(k) and g_hom(diff) == quadratic(k)
    return CheckResult(2, "summation formula equals I_lk(a_k)-I_lk(b_k)", ok == k_max, k_max, ok, f"k=1..{k_max}")


@_timed
def check_block_lk(k_max: int = 10) -> CheckResult:
    ok = total = 0
    bad = []
    for k in range(1, k_max + 1):
        for kind in ("a", "b"):
            sm = smooth_all(hat(make_family(kind, k)))
            for i in range(1, k + 1):
                got = [sm[p - 1].lk for p in w_block_positions(kind, k, i)]
                total += 1
                if got == expected_block_lk(kind, k, i):
                    ok += 1
                elif len(bad) < 3:
                    bad.append(f"{kind}_{k} i={i}: {got}")
    return CheckResult(3, "per-crossing lk in the W^k segment", ok == total, total, ok, "; ".join(bad))


@_timed
def check_schedule(k_max: int = 8) -> CheckResult:
    ok = 0
    for k in range(1, k_max + 1):
        tr = slide_schedule(k)
        braids = sum(s.move.kind == BRAID for s in tr.steps)
        gs = [big_g(tr.start)] + [big_g(s.word) for s in tr.steps]
        steps_ok = all(y - x == -1 for x, y in zip(gs, gs[1:]))
        good = (
            braids == len(tr) == quadratic(k)
            and tr.replay()
            and tr.final == make_family("b", k)
            and steps_ok
        )
        ok += good
    return CheckResult(4, "slide schedule: 4k^2 braid moves, G drops by 1 each", ok == k_max, k_max, ok, f"k=1..{k_max}")


@_timed
def check_search(max_len: int = 16, max_cost: int = 6, time_limit: float = 60.0) -> CheckResult:
    t0 = time.perf_counter()
    res = search_distance(make_family("a", 1), empty(3), max_len, max_cost, lower_bound=4)
    elapsed = time.perf_counter() - t0
    good = (
        res.cost_upper == 4
        and res.certified_exact
        and res.trace is not None
        and res.trace.replay()
        and res.trace.final == empty(3)
        and elapsed < time_limit
    )
    return CheckResult(5, "certified d(a_1, E) = 4 by search", good, 1, int(good), res.summary())


@_timed
def check_remark(k_max: int = 10) -> CheckResult:
    """|G(V^k W^k) - G(W^k V^k)| = 4k^2, read literally on the bare words."""
    ok = 0
    bad = []
    for k in range(1, k_max + 1):
        d = abs(big_g(power(V, k) + power(W, k)) - big_g(power(W, k) + power(V, k)))
        if d == quadratic(k):
            ok += 1
        elif len(bad) < 3:
            bad.append(f"k={k}: got {d}")
    return CheckResult(7, "remark |G(V^kW^k)-G(W^kV^k)|=4k^2", ok == k_max, k_max, ok, "; ".join(bad))


@_timed
def check_remark_in_context(k_max: int = 10) -> CheckResult:
    """Same pair inside the context W^-k ... V^-k, where G does separate them."""
    ok = 0
    for k in range(1, k_max + 1):
        left, right = power(W, -k), power(V, -k)
        u = left + power(V, k) + power(W, k) + right
        v = left + power(W, k) + power(V, k) + right
        ok += abs(big_g(u) - big_g(v)) == quadratic(k)
    return CheckResult(7, "remark via context W^-k(.)V^-k", ok == k_max, k_max, ok, f"k=1..{k_max}")


@_timed
def check_base(seed: int = 0, trials: int = 1000, k_max: int = 25) -> CheckResult:
    rng = random.Random(seed)
    attempted = passing = 0
    attempted += 1
    passing += i_lk(empty(3)) == FreeAbelianValue.X(0, 2) and big_g(empty(3)) == 0
    for _ in range(trials):
        w = random_word(rng, rng.randint(2, 6), rng.randint(0, 30))
        attempted += 1
        passing += parse_word(format_word(w), w.n) == w
    for k in range(1, k_max + 1):
        attempted += 1
        passing += permutation(make_family("a", k)).is_identity()
    return CheckResult(8, "base cases, round-trip, permutation(a_k)=id", passing == attempted, attempted, passing)


@_timed
def check_pinning() -> CheckResult:
    lk = pinning_lk()
    return CheckResult(9, "sign convention pinned (lk = -2)", lk == -2, 1, int(lk == -2), f"lk={lk}")


# -- randomized move-effect sweep ------------------------------------------

def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    alphabet = [k for i in range(1, n) for k in (i, -i)]
    return BraidWord(n, tuple(rng.choice(alphabet) for _ in range(length)))


def random_knot_word(rng: random.Random, n: int, max_len: int, min_len: int = 0) -> BraidWord:
    while True:
        w = random_word(rng, n, rng.randint(min_len, max_len))
        if hat(w).knot:
            return w


def sample_move(rng: random.Random, kind: str, n: int, max_len: int = 30, max_tries: int = 10_000):
    """A random knot-closure word with a random move of ``kind`` on it."""
    for _ in range(max_tries):
        if kind == INSERT:
            w = random_knot_word(rng, n, max_len - 2)
            m = insert(rng.randint(1, len(w) + 1), rng.randint(1, n - 1), rng.choice((POS_NEG, NEG_POS)))
            return w, m
        w = random_knot_word(rng, n, max_len, min_len=2)
        moves = [m for m in applicable_moves(w) if m.kind == kind]
        if moves:
            return w, rng.choice(moves)
    raise RuntimeError(f"no {kind} move found in {max_tries} samples")


MOVE_EXPECTATIONS = {
    BRAID: ({RIII_X, RIII_Y}, 1),
    CANCEL: ({MATCHED_RII}, 0),
    INSERT: ({MATCHED_RII}, 0),
    COMMUTE: ({ZERO}, None),
}


def move_trial(rng: random.Random, kind: str, trial: int) -> tuple[bool, str]:
    n = (4, 5, 6)[trial % 3] if kind == COMMUTE else 3
    w, m = sample_move(rng, kind, n)
    after = apply_move(w, m)
    shape = classify_delta(w, after)
    shapes, dg = MOVE_EXPECTATIONS[kind]
    ok = shape.kind in shapes
    if ok and dg is not None:
        ok = abs(big_g(after) - big_g(w)) == dg
    return ok, f"{kind} on [{w}] {m}: {shape}"


@_timed
def check_moves(trials: int = 500, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    attempted = passing = 0
    bad = []
    rows = []
    for kind in (BRAID, COMMUTE, CANCEL, INSERT):
        kind_ok = 0
        for t in range(trials):
            ok, what = move_trial(rng, kind, t)
            attempted += 1
            kind_ok += ok
            if not ok and len(bad) < 3:
                bad.append(what)
        passing += kind_ok
        rows.append({"move": kind, "trials": trials, "passing": kind_ok})
    detail = ", ".join(f"{r['move']} {r['passing']}/{r['trials']}" for r in rows)
    if bad:
        detail += " | " + "; ".join(bad)
    return CheckResult(6, "move-effect table", passing == attempted, attempted, passing, detail, rows=rows)


SUITES = {
    "family": ("theorem", "schedule"),
    "formula": ("formula", "block_lk"),
    "moves": ("moves",),
    "search": ("search",),
    "base": ("base", "pinning"),
    "remark": ("remark", "remark_context"),
}
SUITES["all"] = ("theorem", "formula", "block_lk", "schedule", "search", "moves", "remark", "remark_context", "base", "pinning")


def run_suite(suite: str, trials: int = 500, seed: int = 0, k_max: int | None = None) -> list[CheckResult]:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    km = {} if k_max is None else {"k_max": k_max}
    runners = {
        "theorem": lambda: check_theorem(**km),
        "formula": lambda: check_formula(**km),
        "block_lk": lambda: check_block_lk(**km),
        "schedule": lambda: check_schedule(**km),
        "search": check_search,
        "moves": lambda: check_moves(trials=trials, seed=seed),
        "remark": lambda: check_remark(**km),
        "remark_context": lambda: check_remark_in_context(**km),
        "base": lambda: check_base(seed=seed, **km),
        "pinning": check_pinning,
    }
    return [runners[name]() for name in SUITES[suite]]
