import random
from itertools import product

import pytest

from oracles import upward_closed_ultrafilters
from wallcube.corpus import random_wallspace
from wallcube.errors import NotMinimal, NotUltrafilter, SpaceMismatch, TrivialFlip
from wallcube.ultrafilter import (
    Orientation,
    boolean_median,
    coherent,
    flip,
    is_ultrafilter,
    minimal_walls,
    principal,
    symdiff,
    to_bitstring,
)
from wallcube.wallspace import wall_metric


def orient(space, s):
    return Orientation.from_bitstring(space, s)


def test_principal_examples(PT, P3, HEX6):
    sb = principal(P3, "b")
    assert P3.side_names(sb.chosen(1)) == ["b", "c"]
    assert P3.side_names(sb.chosen(2)) == ["a", "b"]
    assert principal(PT, "p").to_bitstring() == "0"
    s0 = principal(HEX6, 0)
    assert [HEX6.side_names(s0.chosen(i)) for i in (1, 2, 3)] == [
        ["0", "1", "2"],
        ["0", "4", "5"],
        ["0", "1", "5"],
    ]
    # side0 always holds point 0, so its principal orientation is all zeros
    assert s0.to_bitstring() == "0000"


def test_is_ultrafilter_examples(P3, HEX6):
    o = orient(HEX6, "0001")
    assert [HEX6.side_names(o.chosen(i)) for i in (1, 2, 3)] == [["0", "1", "2"], ["0", "4", "5"], ["2", "3", "4"]]
    assert is_ultrafilter(o)
    common = HEX6.full
    for i in range(HEX6.w):
        common &= o.chosen(i)
    assert common == 0  # non-principal
    assert not is_ultrafilter(orient(P3, "001"))  # ({a}, {c})
    for space in (P3, HEX6):
        for x in range(space.n):
            assert is_ultrafilter(principal(space, x))


def test_minimal_walls_examples(PT, P3, HEX6):
    assert minimal_walls(principal(HEX6, 0)) == {1, 2, 3}
    assert minimal_walls(principal(P3, "a")) == {1}
    assert minimal_walls(principal(PT, "p")) == frozenset()
    with pytest.raises(NotUltrafilter):
        minimal_walls(orient(P3, "001"))


def test_flip_examples(P3, HEX6):
    assert flip(principal(HEX6, 0), 1) == principal(HEX6, 5)
    assert flip(principal(P3, "a"), 1) == principal(P3, "b")
    with pytest.raises(NotMinimal):
        flip(principal(P3, "a"), 2)
    with pytest.raises(TrivialFlip):
        flip(principal(P3, "a"), 0)


def test_symdiff_examples(P3, HEX6, TWO):
    assert symdiff(principal(HEX6, 0), principal(HEX6, 3)) == {1, 2, 3}
    assert symdiff(principal(P3, "a"), principal(P3, "b")) == {1}
    o = orient(HEX6, "0001")
    assert symdiff(o, o) == frozenset()
    with pytest.raises(SpaceMismatch):
        symdiff(principal(P3, "a"), principal(TWO, "a"))


def test_boolean_median_examples(P3, HEX6):
    sa, sb, sc = (principal(P3, x) for x in "abc")
    assert boolean_median(sa, sb, sc) == sb
    assert boolean_median(sa, sa, sc) == sa
    m = boolean_median(*(principal(HEX6, x) for x in (0, 2, 4)))
    assert m == orient(HEX6, "0001")


def test_serialization_roundtrip(HEX6):
    for bits in range(0, 16, 2):
        s = to_bitstring(bits, 4)
        assert Orientation.from_bitstring(HEX6, s).bits == bits
    with pytest.raises(ValueError):
        Orientation.from_bitstring(HEX6, "1000")


def all_orientations(space):
    for tail in product((0, 1), repeat=space.w - 1):
        yield Orientation(space, sum(b << (i + 1) for i, b in enumerate(tail)))


def small_spaces(count, seed, max_walls=9):
    rng = random.Random(seed)
    return [random_wallspace(rng, 7, max_walls) for _ in range(count)]


@pytest.mark.parametrize("space", small_spaces(40, 11, max_walls=12), ids=lambda s: f"n{s.n}w{s.w}")
def test_pairwise_coherence_equals_upward_closure(space):
    ours = {o.to_bitstring() for o in all_orientations(space) if is_ultrafilter(o)}
    assert ours == upward_closed_ultrafilters(space)


@pytest.mark.parametrize("space", small_spaces(60, 12), ids=lambda s: f"n{s.n}w{s.w}")
def test_ultrafilter_properties(space):
    ufs = [o for o in all_orientations(space) if is_ultrafilter(o)]
    for o in ufs:
        mins = minimal_walls(o)
        for i in range(1, space.w):
            flipped = Orientation(space, o.bits ^ (1 << i))
            # minimal walls are exactly the coherent single flips
            assert (i in mins) == coherent(space, flipped.bits)
        for i in mins:
            p = flip(o, i)
            assert symdiff(o, p) == {i}
            assert flip(p, i) == o
    for a, b, c in product(ufs[:12], repeat=3):
        m = boolean_median(a, b, c)
        assert is_ultrafilter(m)
        assert m == boolean_median(b, c, a) == boolean_median(c, b, a)
    for x, y in product(range(space.n), repeat=2):
        assert len(symdiff(principal(space, x), principal(space, y))) == wall_metric(space, x, y)
