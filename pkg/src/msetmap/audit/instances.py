"""Exhaustive enumeration and seeded random generation of audit instances."""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator

import numpy as np

from ..core import Multiset, Space, enumerate_multisets
from ..mapping import MultisetMap
from ..opmap import OPMap, enumerate_opmaps

__all__ = [
    "enumerate_multisets",
    "domain_space",
    "codomain_space",
    "enumerate_spaces",
    "enumerate_maps",
    "enumerate_orders",
    "count_table",
    "random_space",
    "random_multiset",
    "random_opmap",
    "random_map",
]


def domain_space(k: int, m: int) -> Space:
    return Space(tuple(f"x{i + 1}" for i in range(k)), m)


def codomain_space(k: int, n: int) -> Space:
    return Space(tuple(f"y{i + 1}" for i in range(k)), n)


def enumerate_spaces(max_universe: int, max_bound: int) -> Iterator[Space]:
    for k in range(1, max_universe + 1):
        for m in range(max_bound + 1):
            yield domain_space(k, m)


def enumerate_maps(max_universe: int, max_bound: int) -> Iterator[MultisetMap]:
    """All maps with ``1 <= #X, #Y <= max_universe`` and ``m, n <= max_bound``."""
    for kx in range(1, max_universe + 1):
        for ky in range(1, max_universe + 1):
            for m in range(max_bound + 1):
                dom = domain_space(kx, m)
                for n in range(max_bound + 1):
                    cod = codomain_space(ky, n)
                    ps = list(enumerate_opmaps(m, n))
                    for table in product(cod.elements, repeat=kx):
                        for p in ps:
                            yield MultisetMap(dom, cod, table, p)


def enumerate_orders(space: Space) -> Iterator[tuple]:
    return permutations(space.elements)


_TABLES: dict = {}


def count_table(k: int, bound: int) -> np.ndarray:
    """All count vectors of ``X^bound`` with ``#X = k``, one row each, in enumeration order."""
    key = (k, bound)
    if key not in _TABLES:
        rows = list(product(range(bound + 1), repeat=k))
        arr = np.array(rows, dtype=np.int16).reshape(len(rows), k)
        arr.setflags(write=False)
        _TABLES[key] = arr
    return _TABLES[key]


def random_space(rng: np.random.Generator, max_universe: int, max_bound: int, prefix="x") -> Space:
    k = int(rng.integers(1, max_universe + 1))
    m = int(rng.integers(0, max_bound + 1))
    return Space(tuple(f"{prefix}{i + 1}" for i in range(k)), m)


def random_multiset(rng: np.random.Generator, space: Space) -> Multiset:
    counts = rng.integers(0, space.bound + 1, size=space.size)
    return Multiset._trusted(space, tuple(int(c) for c in counts))


def random_opmap(rng: np.random.Generator, m: int, n: int, kind: str = "any") -> OPMap:
    """A random OP map; ``kind`` biases towards identity/surjective/injective tables."""
    if m == 0:
        return OPMap(0, 0, (0,))
    if kind == "identity" and m == n:
        return OPMap.identity(m)
    if kind == "surjective" and n <= m:
        # choose the first index reaching each of 1..n
        cuts = sorted(rng.choice(np.arange(1, m + 1), size=n, replace=False).tolist()) if n else []
        values, level = [], 0
        for i in range(m + 1):
            while level < n and i >= cuts[level]:
                level += 1
            values.append(level)
        values[m] = n
        return OPMap(m, n, tuple(values))
    if kind == "injective" and n >= m:
        middle = sorted(rng.choice(np.arange(1, n), size=m - 1, replace=False).tolist()) if m > 1 else []
        return OPMap(m, n, (0, *middle, n))
    middle = sorted(int(v) for v in rng.integers(0, n + 1, size=m - 1))
    return OPMap(m, n, (0, *middle, n))


def _random_table(rng, kx, ky, kind):
    if kind == "injective" and ky >= kx:
        return [int(v) for v in rng.permutation(ky)[:kx]]
    if kind == "surjective" and kx >= ky:
        table = [int(v) for v in rng.permutation(ky)] + [int(v) for v in rng.integers(0, ky, size=kx - ky)]
        return [table[i] for i in rng.permutation(kx)]
    return [int(v) for v in rng.integers(0, ky, size=kx)]


def random_map(rng: np.random.Generator, max_universe: int, max_bound: int) -> MultisetMap:
    """A random map; sizes and tables are drawn from a mixture that hits every hypothesis class."""
    u_kind = ("any", "injective", "surjective", "bijective")[int(rng.integers(4))]
    p_kind = ("any", "identity", "surjective", "injective")[int(rng.integers(4))]
    kx = int(rng.integers(1, max_universe + 1))
    if u_kind == "bijective":
        ky = kx
        u_kind = "injective"
    elif u_kind == "injective":
        ky = int(rng.integers(kx, max_universe + 1)) if kx <= max_universe else kx
    elif u_kind == "surjective":
        ky = int(rng.integers(1, kx + 1))
    else:
        ky = int(rng.integers(1, max_universe + 1))
    m = int(rng.integers(0, max_bound + 1))
    if m == 0:
        n = 0
    elif p_kind == "identity":
        n = m
    elif p_kind == "surjective":
        n = int(rng.integers(0, m + 1))
    elif p_kind == "injective":
        n = int(rng.integers(m, max(m, max_bound) + 1))
    else:
        n = int(rng.integers(0, max_bound + 1))
    dom, cod = domain_space(kx, m), codomain_space(ky, n)
    table = _random_table(rng, kx, ky, u_kind)
    return MultisetMap(dom, cod, tuple(cod.elements[i] for i in table), random_opmap(rng, m, n, p_kind))
