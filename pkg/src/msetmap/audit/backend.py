"""Evaluation backends for audit claims.

A claim body is written once against an ``ops`` object and runs on either

* :class:`ScalarOps`, which drives the library's own :class:`Multiset` and
  :class:`MultisetMap` objects one instance at a time, or
* :class:`BatchOps`, which evaluates a whole batch of instances at once on
  numpy count arrays.  Image and preimage are recomputed here from lookup
  tables, independently of :mod:`msetmap.mapping`.

Both expose the same vocabulary: multiset operators (``| & - ~ <= < ==``),
``X``/``Y`` sides with ``zero``/``full``/``const``, ``image``, ``preimage``,
``coincident``, ``card``, ``dist2``, ``sim``, ``pull_le``/``pull_ge``/``pull_eq``
and boolean combinators.
"""

from __future__ import annotations

import numpy as np

from .. import metrics
from ..core import Space, cardinality, coincident
from ..mapping import MultisetMap


class Side:
    def __init__(self, zero, full, const, bound, size):
        self.zero = zero
        self.full = full
        self.const = const
        self.bound = bound
        self.size = size


class ScalarOps:
    """Per-instance evaluation on core objects."""

    def __init__(self, space: Space | None = None, f: MultisetMap | None = None):
        self.f = f
        if f is not None:
            self.X, self.Y = self._side(f.domain), self._side(f.codomain)
            self.cls = f.classify()
            self.p = f.p
        else:
            self.X, self.Y = self._side(space), None

    @staticmethod
    def _side(space):
        return Side(space.zero(), space.full(), space.constant, space.bound, space.size)

    @staticmethod
    def and_(*xs):
        return all(xs)

    @staticmethod
    def or_(*xs):
        return any(xs)

    @staticmethod
    def not_(x):
        return not x

    @staticmethod
    def implies(a, b):
        return (not a) or b

    @staticmethod
    def iff(a, b):
        return bool(a) == bool(b)

    def image(self, a):
        return self.f.image(a)

    def preimage(self, m):
        return self.f.preimage(m)

    coincident = staticmethod(coincident)
    card = staticmethod(cardinality)
    dist2 = staticmethod(metrics.distance2)
    sim = staticmethod(metrics.similarity)

    def _pull(self, a, n, cmp):
        return all(cmp(a[x], n[self.f.u_of(x)]) for x in self.f.domain.elements)

    def pull_le(self, a, n):
        return self._pull(a, n, lambda s, t: s <= t)

    def pull_ge(self, a, n):
        return self._pull(a, n, lambda s, t: s >= t)

    def pull_eq(self, a, n):
        return self._pull(a, n, lambda s, t: s == t)


class Block:
    """A batch of multisets of one space: ``c`` has shape ``(batch, #X)``."""

    __slots__ = ("c", "bound")
    __hash__ = None

    def __init__(self, c: np.ndarray, bound: int):
        self.c = c
        self.bound = bound

    def __or__(self, other):
        return Block(np.maximum(self.c, other.c), self.bound)

    def __and__(self, other):
        return Block(np.minimum(self.c, other.c), self.bound)

    def __sub__(self, other):
        return Block(np.maximum(self.c - other.c, 0), self.bound)

    def __invert__(self):
        return Block(self.bound - self.c, self.bound)

    def __le__(self, other):
        return np.all(self.c <= other.c, axis=-1)

    def __ge__(self, other):
        return other <= self

    def __lt__(self, other):
        return (self <= other) & np.any(self.c < other.c, axis=-1)

    def __eq__(self, other):
        return np.all(self.c == other.c, axis=-1)

    def __ne__(self, other):
        return ~(self == other)


def _block_side(k, bound):
    def const(t):
        return Block(np.full((1, k), t, dtype=np.int16), bound)

    return Side(const(0), const(bound), const, bound, k)


class BatchOps:
    """Vectorised evaluation over numpy batches."""

    def __init__(self, space: Space | None = None, f: MultisetMap | None = None):
        self.f = f
        if f is not None:
            dom, cod = f.domain, f.codomain
            self.X = _block_side(dom.size, dom.bound)
            self.Y = _block_side(cod.size, cod.bound)
            self.cls = f.classify()
            self.p = f.p
            self._u = np.array([cod.index(y) for y in f.u], dtype=np.intp)
            self._pv = np.array(f.p.values, dtype=np.int16)
            sup = np.zeros(cod.bound + 1, dtype=np.int16)
            for i, v in enumerate(f.p.values):
                sup[v] = i  # values ascend, so the last write is the largest index
            self._sup = sup
            self._ky = cod.size
        else:
            self.X, self.Y = _block_side(space.size, space.bound), None

    @staticmethod
    def and_(*xs):
        out = xs[0]
        for x in xs[1:]:
            out = np.logical_and(out, x)
        return out

    @staticmethod
    def or_(*xs):
        out = xs[0]
        for x in xs[1:]:
            out = np.logical_or(out, x)
        return out

    @staticmethod
    def not_(x):
        return np.logical_not(x)

    @staticmethod
    def implies(a, b):
        return np.logical_or(np.logical_not(a), b)

    @staticmethod
    def iff(a, b):
        return np.equal(np.asarray(a, dtype=bool), np.asarray(b, dtype=bool))

    def image(self, a: Block) -> Block:
        top = np.zeros(a.c.shape[:-1] + (self._ky,), dtype=np.int16)
        for x, y in enumerate(self._u):
            np.maximum(top[..., y], a.c[..., x], out=top[..., y])
        # empty fibers keep 0 and p(0) = 0
        return Block(self._pv[top], self.Y.bound)

    def preimage(self, m: Block) -> Block:
        return Block(self._sup[m.c[..., self._u]], self.X.bound)

    @staticmethod
    def coincident(a: Block, b: Block):
        return np.any(a.c.astype(np.int32) + b.c > a.bound, axis=-1)

    @staticmethod
    def card(a: Block):
        return a.c.sum(axis=-1, dtype=np.int64)

    @staticmethod
    def dist2(a: Block, b: Block):
        d = a.c.astype(np.int64) - b.c
        return (d * d).sum(axis=-1)

    @classmethod
    def sim(cls, a: Block, b: Block):
        return 1.0 / (1.0 + np.sqrt(cls.dist2(a, b).astype(np.float64)))

    def _pulled(self, n: Block):
        return n.c[..., self._u]

    def pull_le(self, a, n):
        return np.all(a.c <= self._pulled(n), axis=-1)

    def pull_ge(self, a, n):
        return np.all(a.c >= self._pulled(n), axis=-1)

    def pull_eq(self, a, n):
        return np.all(a.c == self._pulled(n), axis=-1)

