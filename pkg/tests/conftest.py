import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from braidlk.diagram import hat  # noqa: E402
from braidlk.words import BraidWord, strand_order  # noqa: E402


@st.composite
def words(draw, n=None, min_size=0, max_size=12, min_n=2, max_n=6):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    gens = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i)))
    return BraidWord(n, tuple(draw(st.lists(gens, min_size=min_size, max_size=max_size))))


@st.composite
def knot_words(draw, n=3, max_size=14):
    """Words whose hat is a knot; failing draws get a sorting tail appended."""
    w = draw(words(n=n, max_size=max_size))
    if hat(w).knot:
        return w
    order = strand_order(w.letters, n)
    tail = []
    for _ in range(n):
        for i in range(n - 1):
            if order[i] > order[i + 1]:
                order[i], order[i + 1] = order[i + 1], order[i]
                tail.append((i + 1) * draw(st.sampled_from((1, -1))))
    out = BraidWord(n, w.letters + tuple(tail))
    assert hat(out).knot
    return out
