"""Closed braid diagrams, oriented smoothing of a crossing, linking numbers.

Strand identities are start positions 1..n at the top of the braid.  A
letter's crossing is between whichever two identities occupy positions
(i, i+1) when the letter is reached.  Smoothing a braid crossing along the
orientation just deletes the letter, so every quantity here comes from
simulating the occupancy with one swap suppressed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .words import BraidWord, WordError, permutation

# Sign of the crossing drawn for a positive letter sigma_i.  Pinned by
# ``pinning_lk`` which must return -2; flip here, nowhere else, if it doesn't.
POSITIVE_LETTER_SIGN = 1


class NotAKnotError(WordError):
    """The closed braid has more than one component."""


@dataclass(frozen=True)
class ClosedBraid:
    word: BraidWord
    knot: bool

    def __len__(self):
        return len(self.word)


class Crossing(NamedTuple):
    a: int
    b: int
    sign: int
    skipped: bool = False


@dataclass(frozen=True)
class Smoothing:
    position: int
    crossing_sign: int
    components: tuple[tuple[int, ...], tuple[int, ...]]  # (A, B); A holds strand 1
    lk: int

    def component_of(self, strand: int) -> str:
        return "A" if strand in self.components[0] else "B"


def crossing_sign(letter: int) -> int:
    return POSITIVE_LETTER_SIGN if letter > 0 else -POSITIVE_LETTER_SIGN


def closure(word: BraidWord) -> ClosedBraid:
    """Close ``word`` as-is (no staircase appended)."""
    cycles = permutation(word).cycles()
    return ClosedBraid(word, len(cycles) == 1)


def hat(w: BraidWord) -> ClosedBraid:
    """Closure of ``w`` followed by sigma_{n-1} ... sigma_1.

    For n = 3 the appended tail is sigma_2 sigma_1.
    """
    staircase = tuple(range(w.n - 1, 0, -1))
    return closure(BraidWord(w.n, w.letters + staircase))


def _check_pos(c: ClosedBraid, p: int):
    if not 1 <= p <= len(c.word):
        raise IndexError(f"position {p} outside 1..{len(c.word)}")


def occupancy(c: ClosedBraid, skip: int | None = None) -> list[Crossing]:
    """Strand identities meeting at every letter; letter ``skip`` does not swap."""
    if skip is not None:
        _check_pos(c, skip)
    order = list(range(1, c.word.n + 1))
    out = []
    for q, k in enumerate(c.word.letters, start=1):
        i = abs(k) - 1
        a, b = order[i], order[i + 1]
        out.append(Crossing(a, b, crossing_sign(k), q == skip))
        if q != skip:
            order[i], order[i + 1] = b, a
    return out


def _two_components(word: BraidWord, p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    letters = word.letters[: p - 1] + word.letters[p:]
    cycles = permutation(BraidWord(word.n, letters)).cycles()
    if len(cycles) != 2:
        raise AssertionError(f"smoothing gave {len(cycles)} components")
    a, b = cycles
    if 1 not in a:
        a, b = b, a
    return tuple(sorted(a)), tuple(sorted(b))


def _lk(crossings, in_a) -> int:
    total = 0
    for x in crossings:
        if not x.skipped and in_a[x.a] != in_a[x.b]:
            total += x.sign
    if total % 2:
        raise AssertionError("odd inter-component crossing sum")
    return total // 2


def smooth(c: ClosedBraid, p: int) -> Smoothing:
    if not c.knot:
        raise NotAKnotError(f"closure of {c.word} is not a knot")
    _check_pos(c, p)
    comps = _two_components(c.word, p)
    in_a = [False] * (c.word.n + 1)
    for s in comps[0]:
        in_a[s] = True
    lk = _lk(occupancy(c, skip=p), in_a)
    return Smoothing(p, crossing_sign(c.word.letters[p - 1]), comps, lk)


def smooth_all(c: ClosedBraid) -> list[Smoothing]:
    """One smoothing per letter, in letter order.

    Same result as calling :func:`smooth` at every position, but it simulates
    the occupancy once.  Suppressing the swap at letter p only exchanges the
    labels of the two strands that met there for every later letter.
    """
    if not c.knot:
        raise NotAKnotError(f"closure of {c.word} is not a knot")
    n = c.word.n
    crossings = occupancy(c)
    final = list(range(1, n + 1))
    for k in c.word.letters:
        i = abs(k) - 1
        final[i], final[i + 1] = final[i + 1], final[i]

    out = []
    for p, xp in enumerate(crossings, start=1):
        a, b = xp.a, xp.b
        # end position of every identity with swap p suppressed
        end = [0] * (n + 1)
        for pos, s in enumerate(final, start=1):
            end[b if s == a else a if s == b else s] = pos
        in_a = [False] * (n + 1)
        s = 1
        while not in_a[s]:
            in_a[s] = True
            s = end[s]
        total = 0
        for q, x in enumerate(crossings, start=1):
            if q == p:
                continue
            u, v = x.a, x.b
            if q > p:
                u = b if u == a else a if u == b else u
                v = b if v == a else a if v == b else v
            if in_a[u] != in_a[v]:
                total += x.sign
        comp_a = tuple(s for s in range(1, n + 1) if in_a[s])
        comp_b = tuple(s for s in range(1, n + 1) if not in_a[s])
        if not comp_b or total % 2:
            raise AssertionError(f"bad smoothing at {p}")
        out.append(Smoothing(p, xp.sign, (comp_a, comp_b), total // 2))
    return out


def pinning_lk() -> int:
    """lk after smoothing the first crossing of the W block in hat(a_1); should be -2."""
    from .words import make_family

    # a_1 = W^-1 V W V^-1: the W block starts at letter 7
    return smooth(hat(make_family("a", 1)), 7).lk
