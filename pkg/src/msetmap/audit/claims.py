"""Catalog of audited claims.

Every entry is an executable predicate over one *context* (a space, a map,
an OP map, ...) and zero or more quantified variables.  ``requires`` filters
contexts, ``when`` filters instances; only instances passing both count as
checked.  ``asserted`` records whether the source asserts the claim (``holds``)
or asserts its failure (``fails``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from ..core import enumerate_multisets
from ..errors import UnknownClaim
from ..interop import parikh_representation, parikh_vector
from ..metrics import distance2

KINDS = ("space", "map", "nazmul", "opmap", "parikh", "dia")


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    kind: str
    vars: tuple = ()
    check: Callable = None
    side: str = "X"
    requires: Optional[Callable] = None
    when: Optional[Callable] = None
    condition: Optional[Callable] = None
    asserted: str = "holds"
    note: str = ""
    randomized: bool = True

    @property
    def batched(self) -> bool:
        return self.kind in ("space", "map", "nazmul")


def _space(id, statement, vars, check, **kw):
    return Claim(id, statement, "space", vars, check, **kw)


def _map(id, statement, vars, check, side="X", **kw):
    return Claim(id, statement, "map", vars, check, side=side, **kw)


def _op(id, statement, vars, check, **kw):
    return Claim(id, statement, "opmap", vars, check, **kw)


T1 = [
    _space("T1.1", "M | 0 = M", ("M",), lambda o, M: (M | o.X.zero) == M),
    _space("T1.2", "M | m = m", ("M",), lambda o, M: (M | o.X.full) == o.X.full),
    _space("T1.3", "M | M = M", ("M",), lambda o, M: (M | M) == M),
    _space("T1.4", "M | (N | P) = (M | N) | P", ("M", "N", "P"),
           lambda o, M, N, P: (M | (N | P)) == ((M | N) | P)),
    _space("T1.5", "M <= N iff M | N = N", ("M", "N"),
           lambda o, M, N: o.iff(M <= N, (M | N) == N)),
    _space("T1.6", "~0 = m", (), lambda o: ~o.X.zero == o.X.full),
    _space("T1.7", "M <= N iff ~N <= ~M", ("M", "N"),
           lambda o, M, N: o.iff(M <= N, ~N <= ~M)),
    _space("T1.8", "M - N = (M | N) - N", ("M", "N"),
           lambda o, M, N: (M - N) == ((M | N) - N)),
    _space("T1.9", "(M - N) - P <= (M - N) | (M & P)", ("M", "N", "P"),
           lambda o, M, N, P: ((M - N) - P) <= ((M - N) | (M & P))),
    _space("T1.10", "M - (N | P) <= (M - N) & (M - P)", ("M", "N", "P"),
           lambda o, M, N, P: (M - (N | P)) <= ((M - N) & (M - P))),
    _space("T1.11", "M & 0 = 0", ("M",), lambda o, M: (M & o.X.zero) == o.X.zero),
    _space("T1.12", "M & m = M", ("M",), lambda o, M: (M & o.X.full) == M),
    _space("T1.13", "M & M = M", ("M",), lambda o, M: (M & M) == M),
    _space("T1.14", "M & (N & P) = (M & N) & P", ("M", "N", "P"),
           lambda o, M, N, P: (M & (N & P)) == ((M & N) & P)),
    _space("T1.15", "M <= N iff M & N = M", ("M", "N"),
           lambda o, M, N: o.iff(M <= N, (M & N) == M)),
    _space("T1.16", "~m = 0", (), lambda o: ~o.X.full == o.X.zero),
    _space("T1.17", "M - N = M - (M & N)", ("M", "N"),
           lambda o, M, N: (M - N) == (M - (M & N))),
    _space("T1.18", "(M - N) - P <= M - (N | P)", ("M", "N", "P"),
           lambda o, M, N, P: ((M - N) - P) <= (M - (N | P))),
    _space("T1.19", "(M - P) | (N - P) <= (M | N) - P", ("M", "N", "P"),
           lambda o, M, N, P: ((M - P) | (N - P)) <= ((M | N) - P)),
]

COINCIDENCE = [
    _space("MC.1", "not coin(A, B) iff A(x) <= m - B(x) for all x", ("A", "B"),
           lambda o, A, B: o.iff(o.not_(o.coincident(A, B)), A <= ~B),
           note="asserted with non-strict inclusion; the strict form fails whenever A = ~B"),
    _space("MC.2", "A <= B implies not coin(A, ~B)", ("A", "B"),
           lambda o, A, B: o.implies(A <= B, o.not_(o.coincident(A, ~B)))),
]

LEM_NOTE = (
    "A={4/a,2/b,0/c,0/d,3/e} in {a,b,c,d,e}^4 gives A&~A={0/a,2/b,0/c,0/d,1/e} and "
    "A|~A={4/a,2/b,4/c,4/d,3/e}; the often quoted {0/a,1/b,0/c,0/d,2/e} and "
    "{4/a,3/b,4/c,4/d,2/e} do not follow from min/max/complement"
)

LEM = [
    _space("LEM.1", "A & ~A = 0 (classical non-contradiction)", ("A",),
           lambda o, A: (A & ~A) == o.X.zero, asserted="fails", note=LEM_NOTE),
    _space("LEM.2", "A | ~A = m (classical excluded middle)", ("A",),
           lambda o, A: (A | ~A) == o.X.full, asserted="fails", note=LEM_NOTE),
]

OP = [
    _op("P.1", "p constant iff n = 0", (), lambda o: o.iff(o.cls.constant, o.n == 0)),
    _op("P.2", "p surjective implies n <= m", (), lambda o: o.implies(o.cls.surjective, o.n <= o.m)),
    _op("P.3", "p injective implies n >= m", (), lambda o: o.implies(o.cls.injective, o.n >= o.m)),
    _op("P.4", "p bijective implies m = n", (), lambda o: o.implies(o.cls.bijective, o.m == o.n)),
    _op("P.5", "m = n and p surjective implies p bijective", (),
        lambda o: o.implies(o.m == o.n and o.cls.surjective, o.cls.bijective)),
    _op("P.6", "m = n and p injective implies p bijective", (),
        lambda o: o.implies(o.m == o.n and o.cls.injective, o.cls.bijective)),
    _op("P.7", "p bijective iff p identity", (), lambda o: o.iff(o.cls.bijective, o.cls.identity)),
    _op("P.8", "p(min(i, j)) = min(p(i), p(j))", ("i", "j"),
        lambda o, i, j: o.p(min(i, j)) == min(o.p(i), o.p(j))),
    _op("P.9", "p(max(i, j)) = max(p(i), p(j))", ("i", "j"),
        lambda o, i, j: o.p(max(i, j)) == max(o.p(i), o.p(j))),
]


def _ta2(o, hypothesis):
    img, full = o.image(o.X.full), o.Y.full
    return o.and_(img <= full, o.implies(hypothesis, img == full))


TA = [
    _map("TA.1", "f(0) = 0", (), lambda o: o.image(o.X.zero) == o.Y.zero),
    _map("TA.2", "f(m) <= n, with equality if f is u-injective", (),
         lambda o: _ta2(o, o.cls.u_injective),
         note="equality needs every fiber non-empty; a u-injective map that misses a "
              "target element leaves count 0 there"),
    _map("TA.2-incl", "f(m) <= n", (), lambda o: o.image(o.X.full) <= o.Y.full),
    _map("TA.2-amended", "f(m) <= n, with equality if f is u-surjective", (),
         lambda o: _ta2(o, o.cls.u_surjective)),
    _map("TA.3", "f(A | B) = f(A) | f(B)", ("A", "B"),
         lambda o, A, B: o.image(A | B) == (o.image(A) | o.image(B))),
    _map("TA.4", "f(A & B) <= f(A) & f(B), with equality if f is u-injective", ("A", "B"),
         lambda o, A, B: o.and_(
             o.image(A & B) <= (o.image(A) & o.image(B)),
             o.implies(o.cls.u_injective, o.image(A & B) == (o.image(A) & o.image(B))))),
    _map("TA.5", "A <= B implies f(A) <= f(B)", ("A", "B"),
         lambda o, A, B: o.image(A) <= o.image(B), when=lambda o, A, B: A <= B),
    _map("TA.6a", "~f(A) <= f(~A) if f is u-surjective and p-bijective", ("A",),
         lambda o, A: ~o.image(A) <= o.image(~A),
         requires=lambda o: o.cls.u_surjective and o.cls.p_bijective),
    _map("TA.6b", "f(~A) <= ~f(A) if f is u-injective and p-bijective, equality if bijective", ("A",),
         lambda o, A: o.and_(o.image(~A) <= ~o.image(A),
                             o.implies(o.cls.bijective, o.image(~A) == ~o.image(A))),
         requires=lambda o: o.cls.u_injective and o.cls.p_bijective),
    _map("TA.7", "0 <= f^-1(0)", (), lambda o: o.X.zero <= o.preimage(o.Y.zero)),
    _map("TA.8", "f^-1(n) = m", (), lambda o: o.preimage(o.Y.full) == o.X.full),
    _map("TA.9", "f^-1(M | N) <= f^-1(M) | f^-1(N), with equality if f is p-surjective",
         ("M", "N"),
         lambda o, M, N: o.and_(
             o.preimage(M | N) <= (o.preimage(M) | o.preimage(N)),
             o.implies(o.cls.p_surjective, o.preimage(M | N) == (o.preimage(M) | o.preimage(N)))),
         side="Y"),
    _map("TA.10", "f^-1(M) & f^-1(N) <= f^-1(M & N), with equality if f is p-surjective",
         ("M", "N"),
         lambda o, M, N: o.and_(
             (o.preimage(M) & o.preimage(N)) <= o.preimage(M & N),
             o.implies(o.cls.p_surjective, (o.preimage(M) & o.preimage(N)) == o.preimage(M & N))),
         side="Y"),
    _map("TA.11", "M <= N implies f^-1(M) <= f^-1(N) if f is p-surjective", ("M", "N"),
         lambda o, M, N: o.preimage(M) <= o.preimage(N),
         side="Y", requires=lambda o: o.cls.p_surjective, when=lambda o, M, N: M <= N),
    _map("TA.12", "f^-1(~M) = ~f^-1(M) if f is p-bijective", ("M",),
         lambda o, M: o.preimage(~M) == ~o.preimage(M),
         side="Y", requires=lambda o: o.cls.p_bijective),
    _map("TA.13", "A <= f^-1(f(A)), with equality if f is u-injective and p-bijective", ("A",),
         lambda o, A: o.and_(
             A <= o.preimage(o.image(A)),
             o.implies(o.cls.u_injective and o.cls.p_bijective, A == o.preimage(o.image(A))))),
    _map("TA.14", "f(f^-1(M)) <= M, with equality if f is surjective", ("M",),
         lambda o, M: o.and_(
             o.image(o.preimage(M)) <= M,
             o.implies(o.cls.surjective, o.image(o.preimage(M)) == M)),
         side="Y"),
    _map("TA.15", "coin(A, B) implies coin(f(A), f(B)) if f is p-bijective; "
                  "iff when also u-injective", ("A", "B"),
         lambda o, A, B: o.and_(
             o.implies(o.coincident(A, B), o.coincident(o.image(A), o.image(B))),
             o.implies(o.cls.u_injective,
                       o.iff(o.coincident(A, B), o.coincident(o.image(A), o.image(B))))),
         requires=lambda o: o.cls.p_bijective),
]

HICKMAN = [
    _map("TH.1", "f p-injective implies M(x) <= f(M)(u(x))", ("M",),
         lambda o, M: o.pull_le(M, o.image(M)), requires=lambda o: o.cls.p_injective),
    _map("TH.2", "#X = #Y and f surjective implies M(x) >= f(M)(u(x))", ("M",),
         lambda o, M: o.pull_ge(M, o.image(M)),
         requires=lambda o: o.X.size == o.Y.size and o.cls.surjective),
    _map("TH.C", "f injective implies M(x) <= f(M)(u(x))", ("M",),
         lambda o, M: o.pull_le(M, o.image(M)), requires=lambda o: o.cls.injective),
]

METRIC = [
    _map("TM.1", "d(A, B) = d(f(A), f(B)) and S(A, B) = S(f(A), f(B)) "
                 "if f is u-injective and p-bijective", ("A", "B"),
         lambda o, A, B: o.and_(o.dist2(A, B) == o.dist2(o.image(A), o.image(B)),
                                o.sim(A, B) == o.sim(o.image(A), o.image(B))),
         requires=lambda o: o.cls.u_injective and o.cls.p_bijective),
    _map("TM.2", "m > n and f p-surjective implies #A >= #f(A)", ("A",),
         lambda o, A: o.card(A) >= o.card(o.image(A)),
         requires=lambda o: o.X.bound > o.Y.bound and o.cls.p_surjective),
    _map("TM.2-weak", "f p-surjective implies #A >= #f(A)", ("A",),
         lambda o, A: o.card(A) >= o.card(o.image(A)),
         requires=lambda o: o.cls.p_surjective),
    _map("TM.3", "f injective implies #A <= #f(A)", ("A",),
         lambda o, A: o.card(A) <= o.card(o.image(A)), requires=lambda o: o.cls.injective),
]


def _zeros_at_most_one(o, A):
    return sum(1 for c in A.counts if c == 0) <= 1


PARIKH = [
    Claim("PS.1", "sum of the representation image equals the Parikh vector", "parikh", ("A",),
          lambda o, A: parikh_representation(A, o.order).vector_sum == parikh_vector(A, o.order)),
    Claim("PS.2", "the representation map is u-injective", "parikh", ("A",),
          lambda o, A: parikh_representation(A, o.order).map.classify().u_injective,
          condition=_zeros_at_most_one,
          note="elements with count 0 all land on the zero vector; holds when at most one count is 0"),
    Claim("PS.3", "the representation map is p-bijective", "parikh", ("A",),
          lambda o, A: parikh_representation(A, o.order).map.classify().p_bijective,
          note="p sends every positive count to 1, so it is a bijection only when m <= 1"),
]

NAZMUL = [
    Claim("NZ.1", "identity-p map: f^-1(M)(x) = M(u(x))", "nazmul", ("M",),
          lambda o, M: o.pull_eq(o.preimage(M), M), side="Y"),
]


def _max_pair_distance2(space):
    members = list(enumerate_multisets(space))
    return max(distance2(a, b) for a in members for b in members)


DIAMETER = [
    Claim("DIA.1", "sqrt(m) * #X is the largest distance between members of X^m", "dia", (),
          lambda o: o.space.bound * o.space.size**2 == _max_pair_distance2(o.space),
          note="the largest distance is sqrt(m^2 * #X) (between 0 and m); the two agree only "
               "when m = 0 or m = #X",
          randomized=False),
]

CATALOG: tuple = tuple(T1 + COINCIDENCE + LEM + OP + TA + HICKMAN + METRIC + PARIKH + NAZMUL + DIAMETER)

_BY_ID = {c.id: c for c in CATALOG}
assert len(_BY_ID) == len(CATALOG)


def claim_ids() -> list:
    return [c.id for c in CATALOG]


def get_claim(claim_id: str) -> Claim:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise UnknownClaim(f"unknown claim {claim_id!r}") from None

