from itertools import product

import pytest
from hypothesis import given

from msetmap import (
    Multiset,
    OutOfRange,
    Space,
    SpaceMismatch,
    UnknownElement,
    cardinality,
    coincident,
    complement,
    constant,
    difference,
    enumerate_multisets,
    intersect,
    is_submset,
    union,
)

from strategies import space_with, spaces

X = Space("abcd", 4)


def test_space_basics():
    assert X.size == 4
    assert "c" in X and "q" not in X
    assert X.index("c") == 2
    assert str(X) == "{a,b,c,d}^4"
    with pytest.raises(UnknownElement):
        X.index("q")


def test_space_rejects_duplicates_and_negative_bound():
    with pytest.raises(ValueError):
        Space(["a", "a"], 2)
    with pytest.raises(ValueError):
        Space(["a"], -1)


def test_multiset_from_mapping_defaults_to_zero():
    a = Multiset(X, {"b": 4, "d": 1})
    assert a.counts == (0, 4, 0, 1)
    assert a["b"] == 4
    assert str(a) == "{ 0/a, 4/b, 0/c, 1/d }"


def test_multiset_validation():
    with pytest.raises(OutOfRange):
        Multiset(X, {"a": 5})
    with pytest.raises(OutOfRange):
        Multiset(X, [0, -1, 0, 0])
    with pytest.raises(UnknownElement):
        Multiset(X, {"q": 1})
    with pytest.raises(TypeError):
        Multiset(X, [0, 1.5, 0, 0])
    with pytest.raises(ValueError):
        Multiset(X, [1, 2])


def test_multiset_is_immutable():
    a = X.zero()
    with pytest.raises(AttributeError):
        a.counts = (1, 1, 1, 1)


def test_operations_on_known_values():
    a = Multiset(X, [1, 4, 2, 4])
    b = Multiset(X, [3, 0, 2, 1])
    assert (a | b).counts == (3, 4, 2, 4)
    assert (a & b).counts == (1, 0, 2, 1)
    assert (a - b).counts == (0, 4, 0, 3)
    assert (~a).counts == (3, 0, 2, 0)
    assert union(a, b) == a | b and intersect(a, b) == a & b
    assert difference(a, b) == a - b and complement(a) == ~a
    assert cardinality(a) == 11
    assert coincident(a, b)
    assert not coincident(a, ~a)


def test_order_relations():
    a = Multiset(X, [1, 0, 0, 0])
    b = Multiset(X, [1, 2, 0, 0])
    assert a <= b and a < b and b >= a and b > a
    assert not (b <= a)
    assert a <= a and not (a < a)
    assert is_submset(a, b, proper=True)


def test_space_mismatch():
    other = Space("abcd", 3)
    with pytest.raises(SpaceMismatch):
        X.zero() | other.zero()


def test_constants():
    assert constant(X, 2).counts == (2,) * 4
    assert X.zero().counts == (0,) * 4 and X.full().counts == (4,) * 4
    with pytest.raises(OutOfRange):
        constant(X, 5)


def test_empty_space_has_one_multiset():
    e = Space([], 3)
    ms = list(enumerate_multisets(e))
    assert len(ms) == 1 and str(ms[0]) == "{ }"


@pytest.mark.parametrize("k,m,expected", [(1, 2, 3), (3, 3, 64), (0, 5, 1), (2, 0, 1)])
def test_enumeration_count(k, m, expected):
    assert len(list(enumerate_multisets(Space([f"e{i}" for i in range(k)], m)))) == expected


def test_enumeration_is_lexicographic_and_complete():
    s = Space("ab", 2)
    got = [m.counts for m in enumerate_multisets(s)]
    assert got == sorted(product(range(3), repeat=2))


@given(space_with(count=2))
def test_operations_match_pointwise_definitions(data):
    s, a, b = data
    m = s.bound
    for i in range(s.size):
        x, y = a.counts[i], b.counts[i]
        assert (a | b).counts[i] == (x if x >= y else y)
        assert (a & b).counts[i] == (x if x <= y else y)
        assert (a - b).counts[i] == (x - y if x > y else 0)
        assert (~a).counts[i] == m - x
    assert coincident(a, b) == any(x + y > m for x, y in zip(a.counts, b.counts))


@given(space_with(count=1))
def test_complement_is_an_involution(data):
    _, a = data
    assert ~~a == a


@given(spaces())
def test_hash_consistent_with_equality(s):
    assert hash(s.zero()) == hash(Multiset(s, {}))
