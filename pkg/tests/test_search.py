import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from braidlk.diagram import hat
from braidlk.invariant import lower_bound
from braidlk.rewrite import INSERT, apply_move, applicable_moves, move_cost
from braidlk.search import class_edges, default_caps, search_distance, search_distance_words
from braidlk.words import BraidWord, WordError, empty, make_family, parse_word
from conftest import knot_words, words
from oracles import bfs_free_group_distance_zero


def w3(text):
    return parse_word(text, 3)


def test_single_relator():
    r = search_distance(w3("1 2 1"), w3("2 1 2"), max_len=5, max_cost=2)
    assert r.cost_upper == 1 and r.trace.replay() and r.trace.final == w3("2 1 2")


def test_empty_to_empty():
    r = search_distance(empty(3), empty(3))
    assert r.cost_upper == 0 and len(r.trace) == 0


def test_certified_a1():
    r = search_distance(make_family("a", 1), empty(3), max_len=14, max_cost=5, lower_bound=4)
    assert r.cost_upper == 4 and r.certified_exact
    assert r.trace.replay() and r.trace.final == empty(3) and r.trace.type1_count == 4
    assert all(len(s.word) <= 14 for s in r.trace.steps)
    assert [s.g for s in r.trace.steps][-1] == 0


def test_not_found_is_a_result():
    r = search_distance(w3("1"), w3("2"))
    assert not r.found and r.cost_upper is None and not r.certified_exact
    assert "none found within caps" in r.summary()
    assert "max_len=6" in r.caveat


def test_caps_limit():
    # a_1 -> E needs 4 braid moves
    r = search_distance(make_family("a", 1), empty(3), max_len=14, max_cost=3)
    assert not r.found


def test_mismatched_n():
    with pytest.raises(WordError):
        search_distance(w3("1"), parse_word("1", 4))
    with pytest.raises(WordError):
        search_distance_words(w3("1"), parse_word("1", 4))


def test_default_caps():
    assert default_caps(w3("1 2"), w3("1")) == (7, 12)


def test_commute_is_free():
    r = search_distance(parse_word("1 3 1 3", 4), parse_word("3 3 1 1", 4), max_len=6, max_cost=2)
    assert r.cost_upper == 0 and r.trace.final == parse_word("3 3 1 1", 4)


def test_class_edges_sorted_and_witnessed():
    R = (1, 1, 2, 1)
    edges = list(class_edges(R, 3, 8))
    assert edges == sorted(edges, key=lambda e: (e[0], e[1]))
    for target, cost, witness, move in edges:
        assert len(witness) <= 8
        assert apply_move(BraidWord(3, witness), move).letters != witness
        from braidlk.words import reduce_letters

        assert reduce_letters(witness) == R
        assert reduce_letters(apply_move(BraidWord(3, witness), move).letters) == target
        assert cost == move_cost(move)


def test_deterministic():
    a = make_family("a", 1)
    r1 = search_distance(a, empty(3), 16, 6, 4)
    r2 = search_distance(a, empty(3), 16, 6, 4)
    assert r1.trace.records() == r2.trace.records()


def test_zero_cost_classes_oracle():
    # under the cap, freely equal words are joined by inserts/cancels
    for a, b, L in [((1, -1, 2), (2,), 3), ((1, 2), (1, -2, 2, 2), 4), ((), (1, -1), 2)]:
        assert bfs_free_group_distance_zero(a, b, L)
        assert search_distance(BraidWord(3, a), BraidWord(3, b), L, 0).cost_upper == 0


small = st.integers(3, 4).flatmap(lambda n: st.tuples(words(n=n, max_size=4), words(n=n, max_size=4)))


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(small, st.integers(0, 2))
def test_class_engine_matches_word_engine(pair, slack):
    a, b = pair
    L = max(len(a), len(b)) + slack
    fast = search_distance(a, b, L, 2)
    slow = search_distance_words(a, b, L, 2)
    assert fast.cost_upper == slow.cost_upper
    for r in (fast, slow):
        if r.found:
            assert r.trace.replay() and r.trace.final == b
            assert r.trace.type1_count == r.cost_upper
            assert all(len(s.word) <= L for s in r.trace.steps)


@settings(max_examples=40, deadline=None)
@given(words(n=3, max_size=5), st.data())
def test_single_move_bound(w, data):
    m = data.draw(st.sampled_from(applicable_moves(w)))
    v = apply_move(w, m)
    r = search_distance(w, v, max(len(w), len(v)) + 2, 2)
    assert r.found and r.cost_upper <= move_cost(m)


def test_search_respects_lower_bound():
    pairs = [
        (make_family("a", 1), empty(3)),
        (make_family("a", 1), make_family("b", 1)),
        (w3("1 -1 2 1 2 -1"), w3("1 2 1 -2 -1 2")),
        (w3("2 1 -2 1"), w3("-1 2 1 1")),
    ]
    for a, b in pairs:
        if not (hat(a).knot and hat(b).knot):
            continue
        r = search_distance(a, b, max(len(a), len(b)) + 4, 6)
        if r.found:
            assert r.cost_upper >= lower_bound(a, b)


@settings(max_examples=30, deadline=None)
@given(knot_words(n=3, max_size=6), st.lists(st.integers(0, 10_000), min_size=1, max_size=4))
def test_found_costs_dominate_g_gap(a, picks):
    b = a
    for pick in picks:
        moves = [m for m in applicable_moves(b) if m.kind != INSERT or len(b) < 8]
        if not moves:
            break
        b = apply_move(b, moves[pick % len(moves)])
    r = search_distance(a, b, max(len(a), len(b)) + 2, 4)
    assert r.found
    assert r.cost_upper >= lower_bound(a, b)
