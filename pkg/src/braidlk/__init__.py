"""Lower bounds on braid relation counts from the linking-number invariant I_lk."""

from .diagram import ClosedBraid, NotAKnotError, Smoothing, hat, occupancy, smooth, smooth_all
from .invariant import (
    DeltaShape,
    FreeAbelianValue,
    big_g,
    classify_delta,
    g_hom,
    ga_add,
    ga_scale,
    ga_sub,
    i_lk,
    lower_bound,
    closed_form_difference,
)
from .rewrite import Move, MoveTrace, apply_move, applicable_moves, move_cost, reduce_to_empty, slide_schedule
from .search import SearchResult, search_distance, search_distance_words
from .words import (
    BraidWord,
    Letter,
    Permutation,
    WordError,
    concat,
    delete_last_strands,
    embed,
    empty,
    format_word,
    free_reduce,
    invert,
    make_family,
    parse_word,
    permutation,
    power,
)

__version__ = "0.1.0"
