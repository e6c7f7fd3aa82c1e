"""Bounded multisets over a finite ordered universe.

A :class:`Space` is the arena ``X^m``: an ordered tuple of distinct elements
plus a multiplicity bound ``m``.  A :class:`Multiset` is a dense count table
over one space.  Both are immutable.

The set operators follow the builtin ``set`` conventions::

    A | B     union (pointwise max)
    A & B     intersection (pointwise min)
    A - B     truncated difference
    ~A        complement relative to the bound
    A <= B    sub-multiset, A < B proper sub-multiset
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from itertools import product
from typing import Hashable, Iterable, Iterator

from .errors import OutOfRange, SpaceMismatch, UnknownElement

__all__ = [
    "Space",
    "Multiset",
    "make_multiset",
    "union",
    "intersect",
    "difference",
    "complement",
    "is_submset",
    "constant",
    "coincident",
    "cardinality",
    "enumerate_multisets",
    "format_element",
]


def format_element(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(str(v) for v in x) + ")"
    return str(x)


@dataclass(frozen=True)
class Space:
    """The multiset space ``X^m``: ordered distinct ``elements`` and a ``bound``."""

    elements: tuple
    bound: int
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, elements: Iterable[Hashable], bound: int):
        elements = tuple(elements)
        if isinstance(bound, bool) or not isinstance(bound, int):
            raise TypeError(f"bound must be an int, got {bound!r}")
        if bound < 0:
            raise OutOfRange(f"bound must be nonnegative, got {bound}")
        index = {}
        for i, x in enumerate(elements):
            if x in index:
                raise ValueError(f"duplicate element {format_element(x)!r} in universe")
            index[x] = i
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "_index", index)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def index(self, x) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise UnknownElement(f"{format_element(x)!r} is not an element of this space") from None

    def constant(self, t: int) -> Multiset:
        return constant(self, t)

    def zero(self) -> Multiset:
        return Multiset._trusted(self, (0,) * self.size)

    def full(self) -> Multiset:
        return Multiset._trusted(self, (self.bound,) * self.size)

    def multiset(self, counts) -> Multiset:
        return Multiset(self, counts)

    def __str__(self):
        return "{" + ",".join(format_element(x) for x in self.elements) + "}^" + str(self.bound)


class Multiset:
    """A count table ``A(x)`` over a :class:`Space`, with ``0 <= A(x) <= m``.

    ``counts`` is either a mapping from elements to counts (omitted elements
    count 0) or a sequence aligned with ``space.elements``.
    """

    __slots__ = ("space", "counts")

    def __init__(self, space: Space, counts=()):
        if isinstance(counts, Mapping):
            table = [0] * space.size
            for x, c in counts.items():
                table[space.index(x)] = c
        else:
            table = list(counts)
            if not table and space.size:
                table = [0] * space.size
            if len(table) != space.size:
                raise ValueError(
                    f"expected {space.size} counts for {space}, got {len(table)}"
                )
        for x, c in zip(space.elements, table):
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"count of {format_element(x)!r} must be an int, got {c!r}")
            if c < 0 or c > space.bound:
                raise OutOfRange(
                    f"count {c} of {format_element(x)!r} outside [0, {space.bound}]"
                )
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "counts", tuple(table))

    @classmethod
    def _trusted(cls, space: Space, counts: tuple) -> Multiset:
        obj = cls.__new__(cls)
        object.__setattr__(obj, "space", space)
        object.__setattr__(obj, "counts", counts)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Multiset is immutable")

    def __getitem__(self, x) -> int:
        return self.counts[self.space.index(x)]

    def items(self) -> Iterator[tuple]:
        return zip(self.space.elements, self.counts)

    def as_dict(self) -> dict:
        return dict(self.items())

    def _check(self, other) -> None:
        if not isinstance(other, Multiset):
            raise TypeError(f"expected a Multiset, got {type(other).__name__}")
        if self.space != other.space:
            raise SpaceMismatch(f"{self.space} and {other.space} differ")

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __sub__(self, other):
        return difference(self, other)

    def __invert__(self):
        return complement(self)

    def __le__(self, other):
        return is_submset(self, other)

    def __lt__(self, other):
        return is_submset(self, other, proper=True)

    def __ge__(self, other):
        return is_submset(other, self)

    def __gt__(self, other):
        return is_submset(other, self, proper=True)

    def __eq__(self, other):
        if not isinstance(other, Multiset):
            return NotImplemented
        return self.space == other.space and self.counts == other.counts

    def __hash__(self):
        return hash((self.space, self.counts))

    def __str__(self):
        if not self.counts:
            return "{ }"
        body = ", ".join(f"{c}/{format_element(x)}" for x, c in self.items())
        return "{ " + body + " }"

    def __repr__(self):
        return f"Multiset({self.space}, {self})"


def make_multiset(space: Space, counts) -> Multiset:
    return Multiset(space, counts)


def union(a: Multiset, b: Multiset) -> Multiset:
    a._check(b)
    return Multiset._trusted(a.space, tuple(map(max, a.counts, b.counts)))


def intersect(a: Multiset, b: Multiset) -> Multiset:
    a._check(b)
    return Multiset._trusted(a.space, tuple(map(min, a.counts, b.counts)))


def difference(a: Multiset, b: Multiset) -> Multiset:
    a._check(b)
    return Multiset._trusted(a.space, tuple(max(0, x - y) for x, y in zip(a.counts, b.counts)))


def complement(a: Multiset) -> Multiset:
    m = a.space.bound
    return Multiset._trusted(a.space, tuple(m - c for c in a.counts))


def is_submset(a: Multiset, b: Multiset, proper: bool = False) -> bool:
    a._check(b)
    if any(x > y for x, y in zip(a.counts, b.counts)):
        return False
    if proper:
        return a.counts != b.counts
    return True


def constant(space: Space, t: int) -> Multiset:
    """The constant multiset with every count equal to ``t``."""
    if t < 0 or t > space.bound:
        raise OutOfRange(f"constant {t} outside [0, {space.bound}]")
    return Multiset._trusted(space, (t,) * space.size)


def coincident(a: Multiset, b: Multiset) -> bool:
    """True when ``A(x) + B(x)`` exceeds the bound at some element."""
    a._check(b)
    m = a.space.bound
    return any(x + y > m for x, y in zip(a.counts, b.counts))


def cardinality(a: Multiset) -> int:
    return sum(a.counts)


def enumerate_multisets(space: Space) -> Iterator[Multiset]:
    """All ``(m+1)^#X`` multisets of ``space`` in lexicographic count order."""
    for counts in product(range(space.bound + 1), repeat=space.size):
        yield Multiset._trusted(space, counts)
