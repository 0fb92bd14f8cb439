"""Word modifications: braid relation, far commutation, cancellation/insertion.

Only the braid relation costs 1; the shortest-path search in
:mod:`braidlk.search` uses these weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .words import BraidWord, WordError, free_reduce, make_family, reduce_letters

BRAID = "braid"
COMMUTE = "commute"
CANCEL = "cancel"
INSERT = "insert"

LOWER_TO_UPPER = "LU"  # s_i s_{i+1} s_i -> s_{i+1} s_i s_{i+1}
UPPER_TO_LOWER = "UL"
POS_NEG = "PN"  # insert s_i s_i^-1
NEG_POS = "NP"

_KIND_ORDER = {BRAID: 0, COMMUTE: 1, CANCEL: 2, INSERT: 3}


class MoveError(WordError):
    """A move does not match the word at its position."""


@dataclass(frozen=True)
class Move:
    kind: str
    pos: int  # 1-based start of the window
    direction: str | None = None  # braid only
    gen: int | None = None  # insert only
    order: str | None = None  # insert only

    def encode(self) -> str:
        if self.kind == BRAID:
            return f"braid@{self.pos}:{self.direction}"
        if self.kind == INSERT:
            return f"insert@{self.pos}:{self.gen}:{self.order}"
        return f"{self.kind}@{self.pos}"

    @classmethod
    def decode(cls, text: str) -> "Move":
        try:
            kind, rest = text.split("@")
            parts = rest.split(":")
            pos = int(parts[0])
            if kind == BRAID and len(parts) == 2 and parts[1] in (LOWER_TO_UPPER, UPPER_TO_LOWER):
                return cls(kind, pos, direction=parts[1])
            if kind == INSERT and len(parts) == 3 and parts[2] in (POS_NEG, NEG_POS):
                return cls(kind, pos, gen=int(parts[1]), order=parts[2])
            if kind in (COMMUTE, CANCEL) and len(parts) == 1:
                return cls(kind, pos)
        except ValueError:
            pass
        raise MoveError(f"cannot decode move {text!r}")

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.pos, self.direction or "", self.gen or 0, self.order or "")

    def __str__(self):
        return self.encode()


def move_cost(m: Move) -> int:
    return 1 if m.kind == BRAID else 0


def braid(pos: int, direction: str = LOWER_TO_UPPER) -> Move:
    return Move(BRAID, pos, direction=direction)


def commute(pos: int) -> Move:
    return Move(COMMUTE, pos)


def cancel(pos: int) -> Move:
    return Move(CANCEL, pos)


def insert(pos: int, gen: int, order: str = POS_NEG) -> Move:
    return Move(INSERT, pos, gen=gen, order=order)


# -- single-window logic shared with the search ---------------------------

def window_moves(letters: tuple[int, ...], p: int) -> Iterator[tuple[Move, tuple[int, ...], int]]:
    """Length-preserving moves whose window starts at 0-based ``p``.

    Yields (move, replacement, window length).
    """
    if p + 1 < len(letters):
        x, y = letters[p], letters[p + 1]
        if p + 2 < len(letters) and x > 0 and y > 0 and letters[p + 2] == x and abs(x - y) == 1:
            direction = LOWER_TO_UPPER if y == x + 1 else UPPER_TO_LOWER
            yield braid(p + 1, direction), (y, x, y), 3
        if x > 0 and y > 0 and abs(x - y) >= 2:
            yield commute(p + 1), (y, x), 2


def applicable_moves(w: BraidWord) -> list[Move]:
    """Every move on ``w``, inserts included (callers cap growth)."""
    letters = w.letters
    out = []
    for p in range(len(letters)):
        out.extend(m for m, _, _ in window_moves(letters, p))
        if p + 1 < len(letters) and letters[p] == -letters[p + 1]:
            out.append(cancel(p + 1))
    for p in range(1, len(letters) + 2):
        for i in range(1, w.n):
            out.append(insert(p, i, POS_NEG))
            out.append(insert(p, i, NEG_POS))
    return out


def length_preserving_moves(w: BraidWord) -> list[Move]:
    return [m for m in applicable_moves(w) if m.kind in (BRAID, COMMUTE)]


def apply_move(w: BraidWord, m: Move) -> BraidWord:
    L = w.letters
    p = m.pos - 1
    if m.kind == INSERT:
        if not 0 <= p <= len(L) or m.gen is None or not 1 <= m.gen <= w.n - 1:
            raise MoveError(f"{m} not applicable to [{w}]")
        pair = (m.gen, -m.gen) if m.order == POS_NEG else (-m.gen, m.gen)
        return BraidWord(w.n, L[:p] + pair + L[p:])
    if m.kind == CANCEL:
        if not (0 <= p and p + 1 < len(L) and L[p] == -L[p + 1]):
            raise MoveError(f"{m} not applicable to [{w}]")
        return BraidWord(w.n, L[:p] + L[p + 2 :])
    if 0 <= p:
        for cand, repl, size in window_moves(L, p):
            if cand == m:
                return BraidWord(w.n, L[:p] + repl + L[p + size :])
    raise MoveError(f"{m} not applicable to [{w}]")


def inverse_move(w: BraidWord, m: Move) -> Move:
    """The move taking ``apply_move(w, m)`` back to ``w``."""
    if m.kind == BRAID:
        return braid(m.pos, UPPER_TO_LOWER if m.direction == LOWER_TO_UPPER else LOWER_TO_UPPER)
    if m.kind == COMMUTE:
        return m
    if m.kind == INSERT:
        return cancel(m.pos)
    first = w.letters[m.pos - 1]
    return insert(m.pos, abs(first), POS_NEG if first > 0 else NEG_POS)


# -- traces ------------------------------------------------------------------

@dataclass(frozen=True)
class Step:
    move: Move
    word: BraidWord
    g: int | None = None


@dataclass
class MoveTrace:
    start: BraidWord
    steps: list[Step] = field(default_factory=list)

    @property
    def type1_count(self) -> int:
        return sum(move_cost(s.move) for s in self.steps)

    @property
    def final(self) -> BraidWord:
        return self.steps[-1].word if self.steps else self.start

    def __len__(self):
        return len(self.steps)

    def push(self, m: Move) -> BraidWord:
        w = apply_move(self.final, m)
        self.steps.append(Step(m, w))
        return w

    def extend(self, other: "MoveTrace"):
        if other.start != self.final:
            raise MoveError("trace does not continue from the current word")
        self.steps.extend(other.steps)

    def replay(self) -> bool:
        """Re-apply every move from ``start`` and compare the recorded words."""
        w = self.start
        for s in self.steps:
            w = apply_move(w, s.move)
            if w != s.word:
                return False
        return True

    def with_g(self, g) -> "MoveTrace":
        """Copy with every step annotated by ``g(word)``."""
        return MoveTrace(self.start, [Step(s.move, s.word, g(s.word)) for s in self.steps])

    def records(self) -> list[dict]:
        out = []
        for i, s in enumerate(self.steps, start=1):
            rec = {"step": i, "move": s.move.encode(), "word": str(s.word)}
            if s.g is not None:
                rec["G"] = s.g
            out.append(rec)
        return out


# -- explicit schedules ------------------------------------------------------

# VW -> WV on the window [1,1,2,1,1,2]: (offset, direction)
MICRO_SCHEDULE = (
    (2, LOWER_TO_UPPER),
    (1, LOWER_TO_UPPER),
    (4, UPPER_TO_LOWER),
    (3, UPPER_TO_LOWER),
)


def slide_schedule(k: int) -> MoveTrace:
    """4k^2 braid relations sliding V^k through W^k, turning a_k into b_k.

    The rightmost V in the block sequence is moved first, one W at a time.
    """
    if k < 1:
        raise WordError(f"k must be >= 1, got {k}")
    trace = MoveTrace(make_family("a", k))
    base = 4 * k  # letters of the leading W^-k
    blocks = ["V"] * k + ["W"] * k
    while True:
        # rightmost V followed by a W
        j = max((i for i in range(len(blocks) - 1) if blocks[i] == "V" and blocks[i + 1] == "W"), default=None)
        if j is None:
            break
        offset = base + sum(2 if b == "V" else 4 for b in blocks[:j])
        for off, direction in MICRO_SCHEDULE:
            trace.push(braid(offset + off, direction))
        blocks[j], blocks[j + 1] = "W", "V"
    return trace


def cancel_trace(w: BraidWord) -> MoveTrace:
    """Cancel the leftmost inverse pair until the word is freely reduced."""
    trace = MoveTrace(w)
    cur = w.letters
    while True:
        p = next((i for i in range(len(cur) - 1) if cur[i] == -cur[i + 1]), None)
        if p is None:
            return trace
        cur = trace.push(cancel(p + 1)).letters


def insert_trace(reduced: BraidWord, target: BraidWord) -> MoveTrace:
    """Inserts growing ``reduced`` into ``target``; ``target`` must reduce to it."""
    down = cancel_trace(target)
    if down.final != reduced:
        raise MoveError(f"[{target}] does not reduce to [{reduced}]")
    trace = MoveTrace(reduced)
    words = [target] + [s.word for s in down.steps]
    for i in range(len(down.steps) - 1, -1, -1):
        trace.push(inverse_move(words[i], down.steps[i].move))
    return trace


def reduce_to_empty(w: BraidWord) -> MoveTrace:
    if reduce_letters(w.letters):
        raise WordError(f"[{w}] is not freely trivial (reduces to [{free_reduce(w)}])")
    return cancel_trace(w)
