"""Bounded multisets, order-preserving count maps and multiset mappings ``f = (u, p)``."""

from .core import (
    Multiset,
    Space,
    cardinality,
    coincident,
    complement,
    constant,
    difference,
    enumerate_multisets,
    intersect,
    is_submset,
    make_multiset,
    union,
)
from .errors import (
    BadAssignment,
    BadOrder,
    BoundMismatch,
    BoundTooSmall,
    DuplicateName,
    EvalError,
    MultisetError,
    NotOP,
    OutOfRange,
    ParseError,
    SpaceMismatch,
    UndeclaredName,
    UnknownClaim,
    UnknownElement,
)
from .interop import (
    hickman_classify,
    khomenko_codomain,
    khomenko_image,
    nazmul_map,
    parikh_representation,
    parikh_vector,
)
from .mapping import MapClass, MultisetMap, classify_map, image, make_map, preimage
from .metrics import diameter, distance, distance2, format_real, max_distance2, similarity
from .opmap import OPClass, OPMap, count_opmaps, enumerate_opmaps, make_opmap

__version__ = "0.1.0"
