import math
from itertools import product

import pytest
from hypothesis import given

from msetmap import (
    Multiset,
    Space,
    SpaceMismatch,
    diameter,
    distance,
    distance2,
    enumerate_multisets,
    format_real,
    max_distance2,
    similarity,
)

from strategies import space_with


def test_known_distance():
    s = Space("ab", 4)
    a, b = Multiset(s, [0, 0]), Multiset(s, [3, 4])
    assert distance2(a, b) == 25
    assert distance(a, b) == 5.0
    assert similarity(a, b) == pytest.approx(1 / 6, abs=1e-12)
    assert format_real(similarity(a, b)) == "0.166667"


def test_mismatch():
    with pytest.raises(SpaceMismatch):
        distance(Space("a", 1).zero(), Space("a", 2).zero())


def test_diameter_is_printed_quantity():
    s = Space("abcd", 4)
    assert diameter(s) == pytest.approx(2 * 4)
    assert max_distance2(s) == 16 * 4
    assert distance2(s.zero(), s.full()) == max_distance2(s)


def test_format_real():
    assert format_real(1.0) == "1.000000"
    assert format_real(2 ** 0.5) == "1.414214"
    assert format_real(0.0000005) == "0.000000"


@pytest.mark.parametrize("k,m", [(k, m) for k in range(3) for m in range(3)])
def test_metric_axioms_exhaustive(k, m):
    s = Space([f"e{i}" for i in range(k)], m)
    ms = list(enumerate_multisets(s))
    for a, b in product(ms, repeat=2):
        assert distance2(a, b) == distance2(b, a)
        assert (distance2(a, b) == 0) == (a == b)
        assert similarity(a, b) == similarity(b, a)
        assert 0 < similarity(a, b) <= 1
        assert (similarity(a, b) == 1) == (a == b)
        for c in ms:
            assert distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9


@given(space_with(count=2))
def test_distance_matches_formula(data):
    _, a, b = data
    expected = sum((x - y) ** 2 for x, y in zip(a.counts, b.counts))
    assert distance2(a, b) == expected
    assert distance(a, b) == pytest.approx(math.sqrt(expected))
