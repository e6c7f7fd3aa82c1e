"""Bridges from multiset mappings to Parikh vectors, sum-based images, Hickman
m-injectivity and equal-bound (identity ``p``) mappings."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .core import Multiset, Space, format_element
from .errors import BadAssignment, BadOrder, BoundMismatch, BoundTooSmall
from .mapping import MultisetMap
from .opmap import OPMap

__all__ = [
    "parikh_vector",
    "ParikhRepresentation",
    "parikh_representation",
    "khomenko_codomain",
    "khomenko_image",
    "HickmanVerdict",
    "hickman_classify",
    "nazmul_map",
]


def _order(space: Space, order) -> tuple:
    if order is None:
        return space.elements
    order = tuple(order)
    if len(order) != space.size or set(order) != set(space.elements):
        raise BadOrder(
            "order must list every element of the universe exactly once, got "
            + ", ".join(format_element(x) for x in order)
        )
    return order


def parikh_vector(a: Multiset, order=None) -> tuple:
    """Counts of ``a`` read off in ``order`` (default: universe order)."""
    return tuple(a[t] for t in _order(a.space, order))


@dataclass(frozen=True)
class ParikhRepresentation:
    vector_universe: Space
    map: MultisetMap
    image: Multiset
    vector_sum: tuple


def parikh_representation(a: Multiset, order=None) -> ParikhRepresentation:
    """Encode the Parikh vector of ``a`` as the vector sum of a mapping's image.

    Each ``t_i`` is sent to the vector holding ``A(t_i)`` at position ``i``;
    ``p`` collapses every positive count to 1.  The vector universe holds the
    zero vector followed by ``c * e_j`` for every distinct positive count ``c``
    (first-appearance order) and every position ``j``.
    """
    order = _order(a.space, order)
    k = len(order)
    counts = [a[t] for t in order]

    def at(i, c):
        return tuple(c if j == i else 0 for j in range(k))

    distinct = list(dict.fromkeys(c for c in counts if c > 0))
    vectors = [(0,) * k] + [at(j, c) for c in distinct for j in range(k)]
    m = a.space.bound
    # X^0 admits only the zero multiset; a target bound of 1 would break p(m) = n.
    n = min(1, m)
    universe = Space(vectors, n)
    u = {t: at(i, c) for i, (t, c) in enumerate(zip(order, counts))}
    p = OPMap(m, n, tuple(min(1, i) for i in range(m + 1)))
    f = MultisetMap(a.space, universe, u, p)
    img = f.image(a)
    total = [0] * k
    for vec, mult in img.items():
        for j, v in enumerate(vec):
            total[j] += mult * v
    return ParikhRepresentation(universe, f, img, tuple(total))


def khomenko_codomain(elements, domain: Space) -> Space:
    """A target space wide enough for any sum-based image out of ``domain``."""
    return Space(elements, domain.bound * domain.size)


def khomenko_image(u: Mapping, a: Multiset, codomain: Space) -> Multiset:
    """Sum-based image: ``h(A)(y)`` adds ``A(x)`` over every ``x`` with ``u(x) = y``."""
    need = a.space.bound * a.space.size
    if codomain.bound < need:
        raise BoundTooSmall(f"codomain bound {codomain.bound} < {need} required for sums")
    for x in a.space.elements:
        if x not in u:
            raise BadAssignment(f"u is not defined at {format_element(x)!r}")
        if u[x] not in codomain:
            raise BadAssignment(f"u({format_element(x)}) is not in the codomain")
    counts = dict.fromkeys(codomain.elements, 0)
    for x, c in a.items():
        counts[u[x]] += c
    return Multiset(codomain, counts)


@dataclass(frozen=True)
class HickmanVerdict:
    m_injective: bool
    m_surjective: bool
    m_bijective: bool


def hickman_classify(u: Mapping, m: Multiset, n: Multiset) -> HickmanVerdict:
    """Hickman's m-injective / m-surjective tests for ``u`` from ``m``'s root set to ``n``'s."""
    src, dst = m.space, n.space
    for x in src.elements:
        if x not in u:
            raise BadAssignment(f"u is not defined at {format_element(x)!r}")
        if u[x] not in dst:
            raise BadAssignment(f"u({format_element(x)}) is not in the target universe")
    image = [u[x] for x in src.elements]
    inj = len(set(image)) == len(image) and all(m[x] <= n[u[x]] for x in src.elements)
    surj = set(image) == set(dst.elements) and all(m[x] >= n[u[x]] for x in src.elements)
    return HickmanVerdict(inj, surj, inj and surj)


def nazmul_map(u: Mapping, m: int, codomain=None) -> MultisetMap:
    """The equal-bound specialisation: ``n = m`` and ``p`` the identity.

    The domain is ``u``'s keys in insertion order.  ``codomain`` is a sequence
    of target elements or a :class:`Space` with bound ``m``; by default it is
    the values of ``u`` in first-appearance order.
    """
    domain = Space(tuple(u), m)
    if codomain is None:
        target = Space(tuple(dict.fromkeys(u.values())), m)
    elif isinstance(codomain, Space):
        if codomain.bound != m:
            raise BoundMismatch(f"codomain bound {codomain.bound} differs from {m}")
        target = codomain
    else:
        target = Space(codomain, m)
    return MultisetMap(domain, target, dict(u), OPMap.identity(m))
