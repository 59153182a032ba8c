import random

import pytest
from hypothesis import given, settings, strategies as st

from moyeval.generators import RandomDiagramConfig, random_braid, random_closed_diagram
from moyeval.moy_core import (DiagramError, Kind, binomial_weight, expand_braid, is_flow_conserving,
                              parse_diagram, rotational, validate)
from moyeval.qlaurent import qint
from moyeval.state_sum import enumerate_colorings, sub_labelings

THETA = """
# theta graph
slice: U> 2
slice: Iv 2, S 1 1
slice: Iv 2, M 1 1
slice: C< 2
"""

seeds = st.integers(0, 10 ** 6)


def random_diagram(seed, **kw):
    return random_closed_diagram(random.Random(seed), RandomDiagramConfig(**kw))


def test_parse_theta():
    d = parse_diagram(THETA)
    assert d.closed and not d.has_crossings
    assert len(d.slices) == 4
    assert d.slices[1][1].kind is Kind.SPLIT
    assert d.slices[1][1].labels == (1, 1, 2)
    assert sorted(d.edges.labels) == [1, 1, 2]
    assert binomial_weight(d) == qint(2)


def test_unknown_piece_is_located():
    with pytest.raises(DiagramError) as e:
        parse_diagram("slice: U> 1\nslice: C< 1, Q 3\n")
    assert "line 2" in str(e.value) and "col 14" in str(e.value)


def test_missing_slice_keyword_is_located():
    with pytest.raises(DiagramError) as e:
        parse_diagram("slice: U> 1\n  oops\n")
    assert "line 2, col 3" in str(e.value)


def test_flow_violation_is_rejected():
    with pytest.raises(DiagramError, match="flow"):
        parse_diagram("slice: U> 3\nslice: Iv 3, S 1 1 3\nslice: Iv 3, M 1 1\nslice: C< 3\n")


def test_interface_mismatch_is_rejected():
    with pytest.raises(DiagramError, match="do not match"):
        parse_diagram("slice: U> 1\nslice: C< 2\n")


def test_two_marks_rejected():
    errs = validate(parse_diagram("slice: U>* 1, U>* 1\nslice: C< 1, C< 1\n", validate_result=False))
    assert any("marked" in e[2] for e in errs)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_render_parse_round_trip(seed):
    d = random_diagram(seed)
    assert parse_diagram(d.render()) == d


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_rotational_of_closed_graph_is_integral(seed):
    d = random_diagram(seed)
    assert rotational(d).denominator == 1


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_rotational_is_additive(seed):
    d = random_diagram(seed, max_label=2, max_slices=6)
    rng = random.Random(seed)
    # the two parts of a random (2|0)-coloring are flow-conserving labelings summing to the full one
    coloring = rng.choice(list(enumerate_colorings(d, 2, 0)))
    (a, b), _ = sub_labelings(coloring, 2, 0)
    assert is_flow_conserving(d, a) and is_flow_conserving(d, b)
    ab = tuple(x + y for x, y in zip(a, b))
    assert ab == d.edges.labels
    assert rotational(d, ab) == rotational(d, a) + rotational(d, b)


def test_rotational_signs_of_circles():
    ccw = parse_diagram("slice: U> 1\nslice: C< 1\n")
    cw = parse_diagram("slice: U< 1\nslice: C> 1\n")
    assert rotational(ccw) == 1 and rotational(cw) == -1


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_braid_closures_validate(seed):
    rng = random.Random(seed)
    word, strands = random_braid(rng, 4, 6)
    for side in ("right", "left"):
        for mark in (False, True):
            d = expand_braid(word, strands, label=rng.randint(1, 3), mark=mark, side=side)
            assert validate(d) == []
            assert d.closed
            assert d.n_marked == (1 if mark else 0)


def test_braid_generator_range_checked():
    with pytest.raises(ValueError):
        expand_braid([2], 2)
    with pytest.raises(ValueError):
        expand_braid([1], 2, labels=[1, 2])


@pytest.mark.parametrize("word,strands,components", [
    ([1, 1, 1], 2, 1), ([1, 1], 2, 2), ([], 3, 3), ([1, -2, 1, -2], 3, 1), ([1, 2], 3, 1)])
def test_component_count(word, strands, components):
    assert expand_braid(word, strands).components() == components


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_mirror_is_an_involution(seed):
    d = random_diagram(seed)
    assert d.mirror().mirror() == d
    assert validate(d.mirror()) == []


def test_crossings_listed_in_order():
    d = expand_braid([1, -1], 2)
    kinds = [p.kind for _, _, p in d.crossings()]
    assert kinds == [Kind.CROSS_POS, Kind.CROSS_NEG]
