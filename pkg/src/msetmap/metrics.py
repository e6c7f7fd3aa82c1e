"""Euclidean distance, similarity and diameter on a multiset space.

Comparisons should go through :func:`distance2`, which is exact; the rooted
values are for presentation.
"""

from __future__ import annotations

import math
from decimal import ROUND_HALF_EVEN, Decimal

from .core import Multiset, Space

__all__ = ["distance2", "distance", "similarity", "diameter", "max_distance2", "format_real"]


def distance2(a: Multiset, b: Multiset) -> int:
    a._check(b)
    return sum((x - y) ** 2 for x, y in zip(a.counts, b.counts))


def distance(a: Multiset, b: Multiset) -> float:
    return math.sqrt(distance2(a, b))


def similarity(a: Multiset, b: Multiset) -> float:
    """``1 / (1 + d(A, B))``, always in ``(0, 1]``."""
    return 1.0 / (1.0 + distance(a, b))


def diameter(space: Space) -> float:
    # Printed formula sqrt(m) * #X; the largest pairwise distance is sqrt(m^2 * #X).
    return math.sqrt(space.bound) * space.size


def max_distance2(space: Space) -> int:
    """Squared distance between the empty and the absolute multiset."""
    return space.bound**2 * space.size


def format_real(x: float) -> str:
    return str(Decimal(x).quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN))
