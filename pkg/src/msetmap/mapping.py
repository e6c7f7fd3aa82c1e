"""Multiset mappings ``f = (u, p) : X^m -> Y^n``.

``u`` is an ordinary map between the root sets and ``p`` an order-preserving
map between the multiplicity chains.  The image of ``A`` takes, for every
``y``, ``p`` of the largest count in the fiber ``u^-1(y)`` (0 on an empty
fiber).  The preimage of ``M`` sends ``x`` to the largest ``i`` with
``p(i) = M(u(x))``, or 0 when no such ``i`` exists.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .core import Multiset, Space, format_element
from .errors import BadAssignment, BoundMismatch, SpaceMismatch
from .opmap import OPMap

__all__ = ["MultisetMap", "MapClass", "make_map", "image", "preimage", "classify_map"]


@dataclass(frozen=True)
class MapClass:
    u_injective: bool
    u_surjective: bool
    u_bijective: bool
    p_injective: bool
    p_surjective: bool
    p_bijective: bool
    injective: bool
    surjective: bool
    bijective: bool


def _table(domain: Space, codomain: Space, u) -> tuple:
    """Normalise ``u`` to a tuple of codomain elements aligned with the domain."""
    if isinstance(u, Mapping):
        extra = [x for x in u if x not in domain]
        if extra:
            raise BadAssignment(f"u assigns {format_element(extra[0])!r}, not in the domain")
        missing = [x for x in domain.elements if x not in u]
        if missing:
            raise BadAssignment(f"u is not defined at {format_element(missing[0])!r}")
        table = tuple(u[x] for x in domain.elements)
    else:
        table = tuple(u)
        if len(table) != domain.size:
            raise BadAssignment(f"u needs {domain.size} entries, got {len(table)}")
    for x, y in zip(domain.elements, table):
        if y not in codomain:
            raise BadAssignment(
                f"u({format_element(x)}) = {format_element(y)!r} is not in the codomain"
            )
    return table


class MultisetMap:
    """A mapping between two multiset spaces built from a root-set table and an OP map."""

    __slots__ = ("domain", "codomain", "u", "p", "_fibers")

    def __init__(self, domain: Space, codomain: Space, u, p: OPMap):
        if p.m != domain.bound:
            raise BoundMismatch(f"p starts from {p.m}, domain bound is {domain.bound}")
        if p.n != codomain.bound:
            raise BoundMismatch(f"p ends at {p.n}, codomain bound is {codomain.bound}")
        table = _table(domain, codomain, u)
        fibers = tuple(
            tuple(i for i, y2 in enumerate(table) if y2 == y) for y in codomain.elements
        )
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "u", table)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "_fibers", fibers)

    def __setattr__(self, name, value):
        raise AttributeError("MultisetMap is immutable")

    def u_of(self, x):
        return self.u[self.domain.index(x)]

    @property
    def u_dict(self) -> dict:
        return dict(zip(self.domain.elements, self.u))

    def fiber(self, y) -> tuple:
        """Domain elements sent to ``y``, in domain order."""
        return tuple(self.domain.elements[i] for i in self._fibers[self.codomain.index(y)])

    def __call__(self, a: Multiset) -> Multiset:
        return self.image(a)

    def image(self, a: Multiset) -> Multiset:
        if a.space != self.domain:
            raise SpaceMismatch(f"{a.space} is not the domain {self.domain}")
        counts = []
        for fib in self._fibers:
            if fib:
                counts.append(self.p(max(a.counts[i] for i in fib)))
            else:
                counts.append(0)
        return Multiset._trusted(self.codomain, tuple(counts))

    def preimage(self, m: Multiset) -> Multiset:
        if m.space != self.codomain:
            raise SpaceMismatch(f"{m.space} is not the codomain {self.codomain}")
        counts = tuple(self.p.sup_preimage(m[y]) for y in self.u)
        return Multiset._trusted(self.domain, counts)

    def classify(self) -> MapClass:
        u_inj = len(set(self.u)) == len(self.u)
        u_surj = set(self.u) == set(self.codomain.elements)
        pc = self.p.classify()
        return MapClass(
            u_injective=u_inj,
            u_surjective=u_surj,
            u_bijective=u_inj and u_surj,
            p_injective=pc.injective,
            p_surjective=pc.surjective,
            p_bijective=pc.bijective,
            injective=u_inj and pc.injective,
            surjective=u_surj and pc.surjective,
            bijective=u_inj and u_surj and pc.bijective,
        )

    def then(self, other: MultisetMap) -> MultisetMap:
        """Composite ``other . self``.  Plumbing only; no laws are claimed for it."""
        if other.domain != self.codomain:
            raise SpaceMismatch("codomain of the first map is not the domain of the second")
        return MultisetMap(
            self.domain, other.codomain, tuple(other.u_of(y) for y in self.u), self.p.then(other.p)
        )

    def __eq__(self, other):
        if not isinstance(other, MultisetMap):
            return NotImplemented
        return (self.domain, self.codomain, self.u, self.p) == (
            other.domain,
            other.codomain,
            other.u,
            other.p,
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, self.u, self.p))

    def __repr__(self):
        pairs = ", ".join(
            f"{format_element(x)}->{format_element(y)}" for x, y in zip(self.domain.elements, self.u)
        )
        return f"MultisetMap({self.domain} -> {self.codomain} {{ u: {pairs} ; p: {self.p} }})"


def make_map(domain: Space, codomain: Space, u, p: OPMap) -> MultisetMap:
    return MultisetMap(domain, codomain, u, p)


def image(f: MultisetMap, a: Multiset) -> Multiset:
    return f.image(a)


def preimage(f: MultisetMap, m: Multiset) -> Multiset:
    return f.preimage(m)


def classify_map(f: MultisetMap) -> MapClass:
    return f.classify()
