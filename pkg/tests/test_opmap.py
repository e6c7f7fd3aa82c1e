from itertools import product
from math import comb

import pytest
from hypothesis import given

from msetmap import NotOP, OPMap, OutOfRange, count_opmaps, enumerate_opmaps, make_opmap

from strategies import opmaps


def brute_opmaps(m, n):
    """Filter every table {0..m} -> {0..n} through the OP conditions."""
    found = []
    for t in product(range(n + 1), repeat=m + 1):
        if t[0] == 0 and t[m] == n and all(t[i] <= t[i + 1] for i in range(m)):
            found.append(t)
    return found


P = OPMap(4, 5, (0, 1, 5, 5, 5))


def test_call_and_str():
    assert [P(i) for i in range(5)] == [0, 1, 5, 5, 5]
    assert P.apply(2) == 5
    assert str(P) == "0,1,5,5,5"
    with pytest.raises(OutOfRange):
        P(5)


def test_preimages():
    assert P.preimage(5) == frozenset({2, 3, 4})
    assert P.sup_preimage(5) == 4
    assert P.sup_preimage(1) == 1
    assert P.preimage(3) == frozenset()
    assert P.sup_preimage(3) == 0


@pytest.mark.parametrize(
    "m,n,values",
    [(3, 3, (1, 1, 2, 3)), (3, 3, (0, 1, 2, 2)), (3, 3, (0, 2, 1, 3)), (2, 2, (0, 1)), (0, 2, (0,))],
)
def test_rejects_non_op(m, n, values):
    with pytest.raises(NotOP):
        OPMap(m, n, values)


def test_classification():
    assert OPMap(3, 0, (0, 0, 0, 0)).classify().constant
    c = OPMap(2, 4, (0, 1, 4)).classify()
    assert c.injective and not c.surjective
    c = OPMap(4, 2, (0, 0, 1, 2, 2)).classify()
    assert c.surjective and not c.injective
    c = OPMap.identity(3).classify()
    assert c.bijective and c.identity


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(0, 5)])
def test_enumeration_matches_brute_force(m, n):
    got = [p.values for p in enumerate_opmaps(m, n)]
    assert sorted(got) == brute_opmaps(m, n)
    assert count_opmaps(m, n) == len(got) == comb(n + m - 1, m - 1)


def test_three_to_three_has_ten():
    assert count_opmaps(3, 3) == 10


def test_zero_bound():
    assert [p.values for p in enumerate_opmaps(0, 0)] == [(0,)]
    assert list(enumerate_opmaps(0, 2)) == []


@given(opmaps())
def test_bijective_maps_are_identities(p):
    c = p.classify()
    if c.bijective:
        assert p.values == tuple(range(p.m + 1))


@given(opmaps())
def test_sup_preimage_is_a_right_inverse_on_the_range(p):
    for j in set(p.values):
        assert p(p.sup_preimage(j)) == j


def test_make_opmap_and_composition():
    q = make_opmap(5, 2, [0, 0, 1, 1, 2, 2])
    r = OPMap(2, 1, (0, 1, 1))
    assert q.then(r).values == (0, 0, 1, 1, 1, 1)
