import pytest
from hypothesis import given, strategies as st

from braidlk.rewrite import (
    BRAID,
    CANCEL,
    COMMUTE,
    INSERT,
    LOWER_TO_UPPER,
    MICRO_SCHEDULE,
    NEG_POS,
    POS_NEG,
    UPPER_TO_LOWER,
    Move,
    MoveError,
    MoveTrace,
    apply_move,
    applicable_moves,
    braid,
    cancel,
    commute,
    insert,
    insert_trace,
    inverse_move,
    move_cost,
    reduce_to_empty,
    slide_schedule,
)
from braidlk.words import WordError, empty, free_reduce, make_family, parse_word, permutation
from conftest import words


def w3(text):
    return parse_word(text, 3)


def kinds_at(w, pos):
    return {m.kind for m in applicable_moves(w) if m.pos == pos and m.kind != INSERT}


def test_enumeration_examples():
    ms = applicable_moves(w3("1 2 1"))
    assert braid(1, LOWER_TO_UPPER) in ms
    assert not [m for m in ms if m.kind in (COMMUTE, CANCEL)]
    assert commute(1) in applicable_moves(parse_word("1 3", 4))
    assert cancel(1) in applicable_moves(w3("1 -1"))


def test_only_positive_relator_windows():
    assert kinds_at(w3("-1 -2 -1"), 1) == set()
    assert kinds_at(parse_word("-1 -3", 4), 1) == set()
    assert kinds_at(parse_word("1 -3", 4), 1) == set()
    assert kinds_at(w3("2 1 2"), 1) == {BRAID}
    assert braid(1, UPPER_TO_LOWER) in applicable_moves(w3("2 1 2"))


def test_insert_enumeration_count():
    w = parse_word("1 2", 4)
    ins = [m for m in applicable_moves(w) if m.kind == INSERT]
    assert len(ins) == (len(w) + 1) * (w.n - 1) * 2


def test_apply_examples():
    assert apply_move(w3("1 1 2 1 1 2"), braid(2)).letters == (1, 2, 1, 2, 1, 2)
    assert apply_move(w3("1 -1"), cancel(1)) == empty(3)
    assert apply_move(empty(3), insert(1, 2, POS_NEG)).letters == (2, -2)
    assert apply_move(w3("1"), insert(2, 1, NEG_POS)).letters == (1, -1, 1)


@pytest.mark.parametrize(
    "word, move",
    [("1 2 1", braid(2)), ("1 2 1", braid(1, UPPER_TO_LOWER)), ("1 2", commute(1)), ("1 1", cancel(1)), ("1", insert(3, 1)), ("1", insert(1, 3))],
)
def test_apply_rejects(word, move):
    with pytest.raises(MoveError):
        apply_move(w3(word), move)


def test_costs():
    assert move_cost(braid(1)) == 1
    assert move_cost(commute(1)) == 0
    assert move_cost(cancel(1)) == 0
    assert move_cost(insert(1, 1)) == 0


@pytest.mark.parametrize("m", [braid(5, UPPER_TO_LOWER), commute(3), cancel(2), insert(1, 2, NEG_POS)])
def test_encoding_round_trip(m):
    assert Move.decode(m.encode()) == m


def test_encoding_format():
    assert braid(5).encode() == "braid@5:LU"
    assert insert(1, 2, POS_NEG).encode() == "insert@1:2:PN"
    with pytest.raises(MoveError):
        Move.decode("braid@x")


@given(words(max_size=10), st.data())
def test_moves_apply_and_preserve_permutation(w, data):
    for m in applicable_moves(w):
        v = apply_move(w, m)
        assert permutation(v) == permutation(w)
        assert free_reduce(v) == free_reduce(w) or m.kind in (BRAID, COMMUTE)
        assert len(v) - len(w) == {BRAID: 0, COMMUTE: 0, CANCEL: -2, INSERT: 2}[m.kind]


@given(words(max_size=10))
def test_moves_reversible(w):
    for m in applicable_moves(w):
        v = apply_move(w, m)
        assert apply_move(v, inverse_move(w, m)) == w


def test_micro_schedule_replay():
    w = w3("1 1 2 1 1 2")
    seen = []
    for off, direction in MICRO_SCHEDULE:
        w = apply_move(w, braid(off, direction))
        seen.append(w.letters)
    assert seen == [(1, 2, 1, 2, 1, 2), (2, 1, 2, 2, 1, 2), (2, 1, 2, 1, 2, 1), (2, 1, 1, 2, 1, 1)]


@pytest.mark.parametrize("k", range(1, 9))
def test_slide_schedule(k):
    tr = slide_schedule(k)
    assert tr.start == make_family("a", k)
    assert tr.final == make_family("b", k)
    assert tr.type1_count == len(tr) == 4 * k * k
    assert all(s.move.kind == BRAID for s in tr.steps)
    assert tr.replay()


def test_slide_schedule_k1_positions():
    assert [s.move.encode() for s in slide_schedule(1).steps] == ["braid@6:LU", "braid@5:LU", "braid@8:UL", "braid@7:UL"]
    with pytest.raises(WordError):
        slide_schedule(0)


def test_reduce_to_empty():
    tr = reduce_to_empty(make_family("b", 1))
    assert len(tr) == 6 and all(s.move.kind == CANCEL for s in tr.steps)
    assert tr.final == empty(3) and tr.type1_count == 0 and tr.replay()
    assert len(reduce_to_empty(empty(3))) == 0
    with pytest.raises(WordError):
        reduce_to_empty(make_family("a", 1))


@given(words(max_size=8), st.data())
def test_insert_trace(w, data):
    tr = insert_trace(free_reduce(w), w)
    assert tr.final == w and tr.replay()
    assert all(s.move.kind == INSERT for s in tr.steps)


def test_trace_records():
    tr = MoveTrace(w3("1 2 1"))
    tr.push(braid(1))
    assert tr.records() == [{"step": 1, "move": "braid@1:LU", "word": "2 1 2"}]
    tr.steps[0] = tr.steps[0].__class__(tr.steps[0].move, w3("1 2 1"))
    assert not tr.replay()
