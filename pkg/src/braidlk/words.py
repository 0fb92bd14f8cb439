"""Braid words over the Artin generators.

A word is stored as a strand count ``n`` and a tuple of nonzero signed
integers: ``k > 0`` stands for sigma_k and ``k < 0`` for sigma_|k|^-1.
This is also the text format (``"1 -2 1"``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class WordError(ValueError):
    """Malformed braid word or incompatible strand counts."""


class Letter(NamedTuple):
    index: int
    sign: int

    @classmethod
    def from_int(cls, k: int) -> "Letter":
        if k == 0:
            raise WordError("0 is not a generator")
        return cls(abs(k), 1 if k > 0 else -1)

    def as_int(self) -> int:
        return self.index * self.sign


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise WordError(f"strand count must be >= 2, got {self.n}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for k in letters:
            if k == 0 or abs(k) > self.n - 1:
                raise WordError(f"letter {k} out of range for B_{self.n}")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __str__(self):
        return format_word(self)

    def letter(self, pos: int) -> Letter:
        """1-based access as a :class:`Letter`."""
        return Letter.from_int(self.letters[pos - 1])

    def with_letters(self, letters: Iterable[int]) -> "BraidWord":
        return BraidWord(self.n, tuple(letters))


def empty(n: int = 3) -> BraidWord:
    return BraidWord(n, ())


def parse_word(text: str, n: int | None = None) -> BraidWord:
    letters = []
    for tok in text.split():
        try:
            k = int(tok)
        except ValueError:
            raise WordError(f"not an integer: {tok!r}") from None
        if k == 0:
            raise WordError("0 is not a generator")
        letters.append(k)
    if n is None:
        n = max(2, 1 + max((abs(k) for k in letters), default=0))
    return BraidWord(n, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(k) for k in w.letters)


def _same_n(u: BraidWord, v: BraidWord) -> int:
    if u.n != v.n:
        raise WordError(f"strand counts differ: {u.n} vs {v.n}")
    return u.n


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(-k for k in reversed(w.letters)))


def concat(*words: BraidWord) -> BraidWord:
    if not words:
        raise WordError("concat needs at least one word")
    n = words[0].n
    for w in words[1:]:
        _same_n(words[0], w)
    return BraidWord(n, tuple(k for w in words for k in w.letters))


def power(w: BraidWord, k: int) -> BraidWord:
    if k < 0:
        return power(invert(w), -k)
    return BraidWord(w.n, w.letters * k)


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for k in letters:
        if stack and stack[-1] == -k:
            stack.pop()
        else:
            stack.append(k)
    return tuple(stack)


def free_reduce(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, reduce_letters(w.letters))


# -- permutations -----------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """Strand start position -> end position, stored 0-based as ``images``."""

    images: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Image of the 1-based position ``i``."""
        return self.images[i - 1] + 1

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``: apply ``other`` first."""
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles as tuples of 1-based points, each starting at its minimum."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self.images[i]
            out.append(tuple(cyc))
        return out


def strand_order(letters: Iterable[int], n: int) -> list[int]:
    """Occupancy after all letters: ``order[pos]`` is the strand (0-based) at ``pos``."""
    order = list(range(n))
    for k in letters:
        i = abs(k) - 1
        order[i], order[i + 1] = order[i + 1], order[i]
    return order


def permutation(w: BraidWord) -> Permutation:
    """Where each starting strand ends up, reading letters top to bottom.

    Every letter, regardless of sign, swaps the strands at positions i, i+1, so
    ``permutation(u + v) == permutation(v).compose(permutation(u))``.
    """
    order = strand_order(w.letters, w.n)
    images = [0] * w.n
    for pos, strand in enumerate(order):
        images[strand] = pos
    return Permutation(tuple(images))


# -- word families ----------------------------------------------------------

V = BraidWord(3, (1, 1))
W = BraidWord(3, (2, 1, 1, 2))


def make_family(kind: str, k: int = 1) -> BraidWord:
    """``V``, ``W``, or the length-12k words ``a`` = W^-k V^k W^k V^-k, ``b`` = W^-k W^k V^k V^-k."""
    if kind == "V":
        return V
    if kind == "W":
        return W
    if kind not in ("a", "b"):
        raise WordError(f"unknown family {kind!r}")
    if k < 1:
        raise WordError(f"k must be >= 1, got {k}")
    if kind == "a":
        return concat(power(W, -k), power(V, k), power(W, k), power(V, -k))
    return concat(power(W, -k), power(W, k), power(V, k), power(V, -k))


# -- changing the strand count ----------------------------------------------

def embed(w: BraidWord, m: int) -> BraidWord:
    if m <= w.n:
        raise WordError(f"cannot embed B_{w.n} into B_{m}")
    return BraidWord(m, w.letters)


def delete_last_strands(w: BraidWord, n: int) -> BraidWord:
    """Remove strands whose identity (start position) exceeds ``n``.

    Crossings touching a removed strand vanish; the survivors are re-indexed by
    their rank among the kept strands at that moment.
    """
    if n < 2:
        raise WordError(f"strand count must be >= 2, got {n}")
    if n >= w.n:
        return BraidWord(n, w.letters)
    order = list(range(1, w.n + 1))
    out = []
    for k in w.letters:
        i = abs(k) - 1
        a, b = order[i], order[i + 1]
        if a <= n and b <= n:
            rank = sum(1 for s in order[:i] if s <= n)
            out.append((rank + 1) * (1 if k > 0 else -1))
        order[i], order[i + 1] = b, a
    return BraidWord(n, tuple(out))
