"""Order-preserving maps between finite chains ``{0..m} -> {0..n}``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Sequence

from .errors import NotOP, OutOfRange

__all__ = ["OPMap", "OPClass", "make_opmap", "enumerate_opmaps", "count_opmaps"]


@dataclass(frozen=True)
class OPClass:
    constant: bool
    injective: bool
    surjective: bool
    bijective: bool
    identity: bool


@dataclass(frozen=True)
class OPMap:
    """A monotone map ``p`` with ``p(0) = 0`` and ``p(m) = n``, stored as its value table.

    >>> p = OPMap(4, 5, (0, 1, 5, 5, 5))
    >>> p(2), p.sup_preimage(5)
    (5, 4)
    """

    m: int
    n: int
    values: tuple

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        m, n = self.m, self.n
        if m < 0 or n < 0:
            raise NotOP(f"chain bounds must be nonnegative, got m={m}, n={n}")
        if len(values) != m + 1:
            raise NotOP(f"expected {m + 1} values for m={m}, got {len(values)}")
        if any(isinstance(v, bool) or not isinstance(v, int) for v in values):
            raise NotOP("values must be integers")
        if values[0] != 0:
            raise NotOP(f"p(0) must be 0, got {values[0]}")
        if values[m] != n:
            raise NotOP(f"p({m}) must be {n}, got {values[m]}")
        for i in range(1, m + 1):
            if values[i] < values[i - 1]:
                raise NotOP(f"p({i}) = {values[i]} < p({i - 1}) = {values[i - 1]}")
        if any(v < 0 or v > n for v in values):
            raise NotOP(f"values must lie in [0, {n}]")

    @classmethod
    def identity(cls, m: int) -> OPMap:
        return cls(m, m, tuple(range(m + 1)))

    def __call__(self, i: int) -> int:
        return self.apply(i)

    def apply(self, i: int) -> int:
        if i < 0 or i > self.m:
            raise OutOfRange(f"{i} outside [0, {self.m}]")
        return self.values[i]

    def preimage(self, j: int) -> frozenset:
        """``{i : p(i) = j}``; a contiguous run, possibly empty."""
        if j < 0 or j > self.n:
            raise OutOfRange(f"{j} outside [0, {self.n}]")
        return frozenset(i for i, v in enumerate(self.values) if v == j)

    def sup_preimage(self, j: int) -> int:
        """Largest ``i`` with ``p(i) = j``, or 0 when there is none."""
        return max(self.preimage(j), default=0)

    def classify(self) -> OPClass:
        vals = self.values
        injective = len(set(vals)) == len(vals)
        surjective = set(vals) == set(range(self.n + 1))
        return OPClass(
            constant=len(set(vals)) == 1,
            injective=injective,
            surjective=surjective,
            bijective=injective and surjective,
            identity=self.m == self.n and vals == tuple(range(self.m + 1)),
        )

    def then(self, other: OPMap) -> OPMap:
        """Composite ``other . self``."""
        if other.m != self.n:
            raise NotOP(f"cannot compose {self.m}->{self.n} with {other.m}->{other.n}")
        return OPMap(self.m, other.n, tuple(other.values[v] for v in self.values))

    def __str__(self):
        return ",".join(str(v) for v in self.values)


def make_opmap(m: int, n: int, values: Sequence[int]) -> OPMap:
    return OPMap(m, n, tuple(values))


def enumerate_opmaps(m: int, n: int) -> Iterator[OPMap]:
    """Every OP map ``{0..m} -> {0..n}``, in lexicographic order of value tables."""
    if m == 0:
        if n == 0:
            yield OPMap(0, 0, (0,))
        return
    for middle in combinations_with_replacement(range(n + 1), m - 1):
        yield OPMap(m, n, (0, *middle, n))


def count_opmaps(m: int, n: int) -> int:
    from math import comb

    if m == 0:
        return int(n == 0)
    return comb(n + m - 1, m - 1)
