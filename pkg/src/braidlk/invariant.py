"""The free abelian group on X_j, Y_j (j in Z), the diagram invariant I_lk,
the homomorphism g and the word invariant G = g(I_lk(hat(w))).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .diagram import NotAKnotError, hat, smooth_all
from .words import BraidWord, WordError

Key = tuple[str, int]  # ("X", j) or ("Y", j)


class FreeAbelianValue:
    """Sparse integer combination of basis symbols X_j, Y_j.  Immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, int] | Iterable[tuple[Key, int]] = ()):
        acc: Counter = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (axis, j), c in items:
            if axis not in ("X", "Y"):
                raise ValueError(f"bad axis {axis!r}")
            acc[(axis, int(j))] += int(c)
        self._terms = {k: c for k, c in sorted(acc.items()) if c != 0}

    @classmethod
    def X(cls, j: int, c: int = 1) -> "FreeAbelianValue":
        return cls({("X", j): c})

    @classmethod
    def Y(cls, j: int, c: int = 1) -> "FreeAbelianValue":
        return cls({("Y", j): c})

    @classmethod
    def zero(cls) -> "FreeAbelianValue":
        return cls()

    @property
    def terms(self) -> dict[Key, int]:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, FreeAbelianValue):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "FreeAbelianValue") -> "FreeAbelianValue":
        return FreeAbelianValue(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return FreeAbelianValue({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "FreeAbelianValue") -> "FreeAbelianValue":
        return self + (-other)

    def __mul__(self, c: int) -> "FreeAbelianValue":
        return FreeAbelianValue({k: c * v for k, v in self._terms.items()})

    __rmul__ = __mul__

    def to_json(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for (axis, j), c in self._terms.items():
            out.setdefault(axis, {})[str(j)] = c
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, Mapping[str, int]]) -> "FreeAbelianValue":
        return cls([((axis, int(j)), c) for axis, row in data.items() for j, c in row.items()])

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (axis, j), c in self._terms.items():
            coef = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {coef}{axis}_{j}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def ga_add(u: FreeAbelianValue, v: FreeAbelianValue) -> FreeAbelianValue:
    return u + v


def ga_sub(u: FreeAbelianValue, v: FreeAbelianValue) -> FreeAbelianValue:
    return u - v


def ga_scale(u: FreeAbelianValue, c: int) -> FreeAbelianValue:
    return u * c


# -- the invariants ---------------------------------------------------------

def i_lk(w: BraidWord) -> FreeAbelianValue:
    """Sum over the crossings of hat(w) of X_lk (positive) or Y_lk (negative)."""
    c = hat(w)
    if not c.knot:
        raise NotAKnotError(f"closure of {w} is not a knot")
    counts = Counter(("X" if s.crossing_sign > 0 else "Y", s.lk) for s in smooth_all(c))
    return FreeAbelianValue(counts)


def g_basis(key: Key) -> int:
    axis, j = key
    return abs(j) if axis == "X" else -abs(j - 1)


def apply_hom(v: FreeAbelianValue, on_basis: Callable[[Key], int]) -> int:
    return sum(c * on_basis(k) for k, c in v.terms.items())


def g_hom(v: FreeAbelianValue) -> int:
    return apply_hom(v, g_basis)


def big_g(w: BraidWord) -> int:
    if w.n != 3:
        raise WordError(f"G is defined on B_3 words, got n={w.n}")
    return g_hom(i_lk(w))


def lower_bound(
    a: BraidWord, b: BraidWord, context: tuple[BraidWord, BraidWord] | None = None
) -> int:
    """Lower bound |G(a) - G(b)| on the number of braid relations from a to b.

    With ``context=(left, right)`` the bound is taken on left.a.right versus
    left.b.right instead; any modification sequence from a to b also works
    inside the context, so this is still a lower bound for the bare pair.
    """
    if context is not None:
        left, right = context
        a, b = left + a + right, left + b + right
    return abs(big_g(a) - big_g(b))


def closed_form_difference(k: int) -> FreeAbelianValue:
    """Closed form of I_lk(hat a_k) - I_lk(hat b_k) as a sum over the W blocks."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    terms: Counter = Counter()
    for i in range(1, k + 1):
        terms[("X", i - 2 * k - 1)] += 1
        terms[("X", 2 * k + 1 - i)] += 2
        terms[("X", i - 2 * k)] += 1
        terms[("X", i - k - 1)] -= 1
        terms[("X", k - i + 1)] -= 2
        terms[("X", i - k)] -= 1
    return FreeAbelianValue(terms)


# -- Reidemeister move shapes ----------------------------------------------

ZERO = "Zero"
MATCHED_RII = "MatchedRII"
UNMATCHED_RII = "UnmatchedRII"
RI = "RI"
RIII_X = "RIII_X"
RIII_Y = "RIII_Y"
OTHER = "Other"


@dataclass(frozen=True)
class DeltaShape:
    kind: str
    j: int | None = None
    sign: int = 0
    delta: FreeAbelianValue | None = None

    def __str__(self):
        if self.j is None:
            return self.kind if not self.sign else f"{'+' if self.sign > 0 else '-'}{self.kind}"
        return f"{'+' if self.sign > 0 else '-'}{self.kind}({self.j})"


def shape_of(delta: FreeAbelianValue) -> DeltaShape:
    """Match a delta against the Reidemeister move patterns, up to overall sign."""
    terms = delta.terms
    if not terms:
        return DeltaShape(ZERO, delta=delta)
    if len(terms) == 1:
        ((axis, j), c), = terms.items()
        if j == 0 and abs(c) == 1:
            return DeltaShape(RI, None, c, delta)
        return DeltaShape(OTHER, delta=delta)
    if len(terms) != 2:
        return DeltaShape(OTHER, delta=delta)
    (k1, c1), (k2, c2) = terms.items()  # sorted: X before Y, then by j
    if abs(c1) != 1 or abs(c2) != 1:
        return DeltaShape(OTHER, delta=delta)
    (ax1, j1), (ax2, j2) = k1, k2
    if c1 == c2 and ax1 == "X" and ax2 == "Y":
        if j2 == j1 + 1:
            return DeltaShape(MATCHED_RII, j1, c1, delta)
        if j2 == j1:
            return DeltaShape(UNMATCHED_RII, j1, c1, delta)
    if c1 == -c2 and ax1 == ax2 and j2 == j1 + 1:
        return DeltaShape(RIII_X if ax1 == "X" else RIII_Y, j1, c1, delta)
    return DeltaShape(OTHER, delta=delta)


def classify_delta(before: BraidWord, after: BraidWord) -> DeltaShape:
    if before.n != after.n:
        raise WordError(f"strand counts differ: {before.n} vs {after.n}")
    return shape_of(i_lk(after) - i_lk(before))
