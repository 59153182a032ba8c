import random

import pytest

from moyeval.moves import _close, braid_rows, full_twist, kink, move_pairs, random_skein_triple, skein_triple
from moyeval.moy_core import Kind, expand_braid, validate


def test_pairs_cover_every_move():
    names = [n for n, _, _ in move_pairs(2)]
    for prefix in ("R1+right", "R1-right", "R1+left", "R1-left", "R2+-", "R2-+", "R3+", "R3-"):
        assert any(n.startswith(prefix) for n in names), prefix
    assert len(names) == 40


def test_pairs_are_valid_closed_diagrams():
    for _, before, after in move_pairs(2):
        for d in (before, after):
            assert validate(d, require_closed=True) == []


def test_pairs_keep_components():
    for name, before, after in move_pairs(2):
        assert before.components() == after.components(), name


def test_kink_has_one_crossing_and_two_extrema():
    rows = kink(2, 1, "right")
    kinds = [p.kind for row in rows for p in row]
    assert kinds.count(Kind.CROSS_POS) == 1
    assert Kind.CUP_RL in kinds and Kind.CAP_LR in kinds


def test_full_twist_is_pure():
    rows = full_twist([1, 2, 3])
    assert len(rows) == 6
    # distinct labels only close up when every strand returns to its start
    assert validate(_close(rows, [1, 2, 3]), require_closed=True) == []
    with pytest.raises(Exception):
        _close(braid_rows([1], [1, 2]), [1, 2])


def test_braid_rows_track_labels():
    rows = braid_rows([1], [1, 2])
    assert rows[0][0].labels == (1, 2)


def test_skein_triple_components():
    plus, minus, zero = skein_triple([1, 1, 1], 2, 1)
    assert plus == expand_braid([1, 1, 1], 2)
    assert minus == expand_braid([1, -1, 1], 2)
    assert plus.components() == 1 and zero.components() == 2
    assert len(zero.crossings()) == 2


def test_random_triples_are_reproducible():
    a = random_skein_triple(random.Random(4))
    b = random_skein_triple(random.Random(4))
    assert a == b
