"""Shortest modification sequences between braid words, counting only braid
relations (cost 1; commutation, cancellation and insertion cost 0).

Two engines answer the same question inside the same caps:

``search_distance_words``
    0-1 BFS directly on the graph of words of length <= max_len.  Simple and
    obviously faithful, but the zero-cost insert/cancel closure explodes
    (about 2e7 trivial words of length 16 in B_3).

``search_distance`` (default)
    0-1 BFS on free-reduction classes.  Under the length cap, two freely equal
    words are joined by cancels down to the reduced form and inserts back up,
    never exceeding the longer of the two, so each class is a single zero-cost
    blob.  A window move applicable somewhere in the class is applicable in
    the shortest word X.t.Y with X, Y freely reduced, and X is then a prefix
    of the reduced form plus a tail of length <= (max_len - |R|) / 2.  That
    makes the out-edges of a class cheap to list exactly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .diagram import hat
from .rewrite import (
    BRAID,
    COMMUTE,
    INSERT,
    LOWER_TO_UPPER,
    UPPER_TO_LOWER,
    Move,
    MoveTrace,
    apply_move,
    applicable_moves,
    braid,
    cancel_trace,
    commute,
    insert_trace,
    move_cost,
)
from .words import BraidWord, WordError, reduce_letters

CAVEAT = "exact only within caps (max_len={max_len}, max_cost={max_cost})"


@dataclass
class SearchResult:
    cost_upper: int | None
    trace: MoveTrace | None
    certified_exact: bool
    max_len: int
    max_cost: int
    lower_bound: int | None = None
    explored: int = 0

    @property
    def found(self) -> bool:
        return self.cost_upper is not None

    @property
    def caveat(self) -> str:
        return CAVEAT.format(max_len=self.max_len, max_cost=self.max_cost)

    def summary(self) -> str:
        if not self.found:
            head = "none found within caps"
        else:
            head = f"cost {self.cost_upper}"
            if self.certified_exact:
                head += " (certified exact: matches lower bound)"
        return f"{head}; {self.caveat}"


def default_caps(a: BraidWord, b: BraidWord) -> tuple[int, int]:
    return len(a) + len(b) + 4, 4 * (len(a) + len(b))


def _prepare(a, b, max_len, max_cost):
    if a.n != b.n:
        raise WordError(f"strand counts differ: {a.n} vs {b.n}")
    dl, dc = default_caps(a, b)
    return (dl if max_len is None else max_len), (dc if max_cost is None else max_cost)


def _annotate(trace: MoveTrace) -> MoveTrace:
    if trace.start.n != 3 or not hat(trace.start).knot:
        return trace
    from .invariant import big_g

    return trace.with_g(big_g)


def _result(trace, lower_bound, max_len, max_cost, explored):
    if trace is None:
        return SearchResult(None, None, False, max_len, max_cost, lower_bound, explored)
    cost = trace.type1_count
    certified = lower_bound is not None and cost == lower_bound
    return SearchResult(cost, _annotate(trace), certified, max_len, max_cost, lower_bound, explored)


# -- reference engine: raw words -----------------------------------------

def search_distance_words(a, b, max_len=None, max_cost=None, lower_bound=None) -> SearchResult:
    max_len, max_cost = _prepare(a, b, max_len, max_cost)
    if a == b:
        return _result(MoveTrace(a), lower_bound, max_len, max_cost, 1)
    if len(a) > max_len or len(b) > max_len:
        return _result(None, lower_bound, max_len, max_cost, 0)
    n = a.n
    start, goal = a.letters, b.letters
    dist = {start: 0}
    parent: dict[tuple, tuple] = {}
    dq = deque([(0, start)])
    done = set()
    while dq:
        d, u = dq.popleft()
        if u in done or d != dist[u]:
            continue
        done.add(u)
        if u == goal:
            break
        w = BraidWord(n, u)
        nbrs = []
        for m in applicable_moves(w):
            if m.kind == INSERT and len(u) + 2 > max_len:
                continue
            nbrs.append((apply_move(w, m).letters, m.encode(), m))
        nbrs.sort(key=lambda t: (t[0], t[1]))
        for v, _, m in nbrs:
            c = move_cost(m)
            nd = d + c
            if nd <= max_cost and nd < dist.get(v, nd + 1):
                dist[v] = nd
                parent[v] = (u, m)
                if c:
                    dq.append((nd, v))
                else:
                    dq.appendleft((nd, v))
    if goal not in done:
        return _result(None, lower_bound, max_len, max_cost, len(done))
    moves = []
    v = goal
    while v != start:
        v, m = parent[v]
        moves.append(m)
    trace = MoveTrace(a)
    for m in reversed(moves):
        trace.push(m)
    return _result(trace, lower_bound, max_len, max_cost, len(done))


# -- default engine: free-reduction classes --------------------------------

def window_patterns(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...], str, str | None]]:
    """(window, replacement, kind, braid direction) for every positive relator window."""
    out = []
    for i in range(1, n - 1):
        out.append(((i, i + 1, i), (i + 1, i, i + 1), BRAID, LOWER_TO_UPPER))
        out.append(((i + 1, i, i + 1), (i, i + 1, i), BRAID, UPPER_TO_LOWER))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) >= 2:
                out.append(((i, j), (j, i), COMMUTE, None))
    return out


def _reduced_tails(alphabet, max_len, avoid) -> Iterator[tuple[int, ...]]:
    """Freely reduced words up to ``max_len`` whose first letter is not ``avoid``."""
    stack = [()]
    while stack:
        t = stack.pop()
        yield t
        if len(t) == max_len:
            continue
        for x in alphabet:
            if (t and x == -t[-1]) or (not t and x == avoid):
                continue
            stack.append(t + (x,))


def _prefixes(R, max_len, alphabet):
    tail_len = max(0, (max_len - len(R)) // 2)
    seen = set()
    for c in range(len(R) + 1):
        head = R[:c]
        avoid = -head[-1] if head else None
        for t in _reduced_tails(alphabet, tail_len, avoid):
            X = head + t
            if X not in seen:
                seen.add(X)
                yield X


def class_edges(R: tuple[int, ...], n: int, max_len: int):
    """Out-edges of the class with reduced form ``R``.

    Yields (target reduced form, cost, witness word X.t.Y, move on the witness),
    sorted by target then witness for determinism.
    """
    alphabet = [k for i in range(1, n) for k in (i, -i)]
    patterns = window_patterns(n)
    best = {}
    for X in _prefixes(R, max_len, alphabet):
        Xinv = tuple(-k for k in reversed(X))
        for t, t2, kind, direction in patterns:
            room = max_len - len(t) - len(X)
            if room < 0:
                continue
            tinv = tuple(-k for k in reversed(t))
            Y = reduce_letters(tinv + Xinv + R)
            if len(Y) > room:
                continue
            target = reduce_letters(X + t2 + Y)
            move = braid(len(X) + 1, direction) if kind == BRAID else commute(len(X) + 1)
            witness = X + t + Y
            key = (target, move_cost(move))
            cand = (witness, move.encode(), move)
            if key not in best or cand[:2] < best[key][:2]:
                best[key] = cand
    for (target, cost), (witness, _, move) in sorted(best.items()):
        yield target, cost, witness, move


def search_distance(a, b, max_len=None, max_cost=None, lower_bound=None) -> SearchResult:
    """Fewest braid relations from ``a`` to ``b`` among paths within the caps.

    Words along the path never exceed ``max_len`` letters and paths costing
    more than ``max_cost`` are not explored.  ``certified_exact`` is set when
    the cost found equals ``lower_bound``.
    """
    max_len, max_cost = _prepare(a, b, max_len, max_cost)
    if a == b:
        return _result(MoveTrace(a), lower_bound, max_len, max_cost, 1)
    if len(a) > max_len or len(b) > max_len:
        return _result(None, lower_bound, max_len, max_cost, 0)
    n = a.n
    start, goal = reduce_letters(a.letters), reduce_letters(b.letters)
    dist = {start: 0}
    parent: dict[tuple, tuple] = {}
    dq = deque([(0, start)])
    done = set()
    while dq:
        d, R = dq.popleft()
        if R in done or d != dist[R]:
            continue
        done.add(R)
        if R == goal:
            break
        for target, c, witness, move in class_edges(R, n, max_len):
            nd = d + c
            if nd <= max_cost and nd < dist.get(target, nd + 1):
                dist[target] = nd
                parent[target] = (R, witness, move)
                if c:
                    dq.append((nd, target))
                else:
                    dq.appendleft((nd, target))
    if goal not in done:
        return _result(None, lower_bound, max_len, max_cost, len(done))

    hops = []
    R = goal
    while R != start:
        prev, witness, move = parent[R]
        hops.append((prev, witness, move))
        R = prev
    trace = MoveTrace(a)
    for prev, witness, move in reversed(hops):
        _transit(trace, prev, BraidWord(n, witness))
        trace.push(move)
    _transit(trace, goal, b)
    return _result(trace, lower_bound, max_len, max_cost, len(done))


def _transit(trace: MoveTrace, reduced: tuple, target: BraidWord):
    """Zero-cost cancels/inserts from the trace's current word to ``target``."""
    cur = trace.final
    if cur == target:
        return
    trace.extend(cancel_trace(cur))
    trace.extend(insert_trace(BraidWord(cur.n, reduced), target))
