"""Exhaustive and randomized claim checking.

Each claim is first swept exhaustively over every context and instance
within ``(max_universe, max_bound)``; batched kinds go through the numpy
backend, the rest through the scalar one.  A seeded random phase then draws
``random_trials`` instances from the wider ``(random_universe, random_bound)``
range and evaluates them on the scalar backend.  The reported counterexample
is the first violation in enumeration order, or the first random one when the
sweep found none.
"""

from __future__ import annotations

import json
import zlib
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterator, Optional

import numpy as np

from ..core import Multiset, Space, enumerate_multisets
from ..interop import nazmul_map
from ..mapping import MultisetMap
from ..opmap import OPMap, enumerate_opmaps
from .backend import BatchOps, Block, ScalarOps
from .claims import CATALOG, Claim, get_claim
from .instances import (
    codomain_space,
    count_table,
    domain_space,
    enumerate_maps,
    enumerate_spaces,
    random_map,
    random_multiset,
    random_opmap,
    random_space,
)

__all__ = [
    "AuditBounds",
    "Instance",
    "ClaimResult",
    "AuditReport",
    "run_claim",
    "run_all",
    "replay",
]

HOLDS, VIOLATED, CONDITIONAL = "holds", "violated", "conditional"


@dataclass(frozen=True)
class AuditBounds:
    max_universe: int = 3
    max_bound: int = 3
    random_trials: int = 1000
    seed: int = 0
    random_universe: int = 5
    random_bound: int = 6

    def __post_init__(self):
        if self.max_universe < 1 or self.max_bound < 0 or self.random_trials < 0:
            raise ValueError(f"invalid audit bounds {self}")
        if self.random_universe < 1 or self.random_bound < 0:
            raise ValueError(f"invalid random bounds {self}")


@dataclass(frozen=True)
class Instance:
    """One concrete instance of a claim: its context plus the variable values."""

    kind: str
    space: Optional[Space] = None
    f: Optional[MultisetMap] = None
    p: Optional[OPMap] = None
    order: Optional[tuple] = None
    values: tuple = ()

    def bindings(self) -> list:
        return [v for _, v in self.values]

    def to_text(self) -> str:
        parts = []
        if self.f is not None:
            f = self.f
            parts.append(f"X={f.domain}")
            parts.append(f"Y={f.codomain}")
            parts.append("u=" + ",".join(f"{x}->{y}" for x, y in zip(f.domain.elements, f.u)))
            parts.append(f"p={f.p}")
        if self.p is not None:
            parts.append(f"m={self.p.m} n={self.p.n} p={self.p}")
        if self.space is not None:
            parts.append(f"X={self.space}")
        if self.order is not None:
            parts.append("order=" + ",".join(self.order))
        for name, v in self.values:
            if isinstance(v, Multiset):
                v = "{" + ",".join(f"{c}/{x}" for x, c in v.items()) + "}"
            parts.append(f"{name}={v}")
        return " ".join(parts)

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.space is not None:
            out["space"] = _space_dict(self.space)
        if self.f is not None:
            out["domain"] = _space_dict(self.f.domain)
            out["codomain"] = _space_dict(self.f.codomain)
            out["u"] = list(self.f.u)
            out["p"] = list(self.f.p.values)
        if self.p is not None:
            out["m"], out["n"], out["p"] = self.p.m, self.p.n, list(self.p.values)
        if self.order is not None:
            out["order"] = list(self.order)
        out["values"] = {
            name: list(v.counts) if isinstance(v, Multiset) else v for name, v in self.values
        }
        return out

    @classmethod
    def from_dict(cls, d: dict, claim: Claim) -> Instance:
        kind = d["kind"]
        space = f = p = None
        if "space" in d:
            space = _space_from(d["space"])
        if "domain" in d:
            dom, cod = _space_from(d["domain"]), _space_from(d["codomain"])
            f = MultisetMap(dom, cod, tuple(d["u"]), OPMap(dom.bound, cod.bound, tuple(d["p"])))
        elif "m" in d:
            p = OPMap(d["m"], d["n"], tuple(d["p"]))
        order = tuple(d["order"]) if "order" in d else None
        values = []
        for name in claim.vars:
            raw = d["values"][name]
            if kind == "opmap":
                values.append((name, raw))
            else:
                target = space if space is not None else (f.domain if claim.side == "X" else f.codomain)
                values.append((name, Multiset(target, tuple(raw))))
        return cls(kind, space, f, p, order, tuple(values))


def _space_dict(s: Space) -> dict:
    return {"elements": list(s.elements), "bound": s.bound}


def _space_from(d: dict) -> Space:
    return Space(tuple(d["elements"]), d["bound"])


@dataclass
class ClaimResult:
    claim: str
    status: str
    instances_checked: int
    counterexample: Optional[Instance] = None
    note: str = ""
    statement: str = ""
    asserted: str = HOLDS

    def line(self) -> str:
        text = f"CLAIM {self.claim} {self.status} checked={self.instances_checked}"
        if self.counterexample is not None:
            text += " counterexample: " + self.counterexample.to_text()
        return text

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "status": self.status,
            "instances_checked": self.instances_checked,
            "counterexample": None if self.counterexample is None else self.counterexample.to_dict(),
            "note": self.note,
            "statement": self.statement,
            "asserted": self.asserted,
        }


@dataclass
class AuditReport:
    bounds: AuditBounds
    results: list = field(default_factory=list)

    def summary(self) -> dict:
        counts = {HOLDS: 0, VIOLATED: 0, CONDITIONAL: 0}
        for r in self.results:
            counts[r.status] += 1
        return {"claims": len(self.results), **counts}

    @property
    def violated(self) -> list:
        return [r for r in self.results if r.status == VIOLATED]

    def to_text(self) -> str:
        b = self.bounds
        lines = [
            f"AUDIT max_universe={b.max_universe} max_bound={b.max_bound} "
            f"trials={b.random_trials} seed={b.seed} "
            f"random_universe={b.random_universe} random_bound={b.random_bound}"
        ]
        lines += [r.line() for r in self.results]
        lines += [f"NOTE {r.claim} {r.note}" for r in self.results if r.note]
        s = self.summary()
        lines.append(
            f"SUMMARY claims={s['claims']} holds={s[HOLDS]} violated={s[VIOLATED]} "
            f"conditional={s[CONDITIONAL]}"
        )
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "bounds": dict(vars(self.bounds)),
            "results": [r.to_dict() for r in self.results],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


# -- contexts -------------------------------------------------------------


@dataclass(frozen=True)
class _Ctx:
    space: Optional[Space] = None
    f: Optional[MultisetMap] = None
    p: Optional[OPMap] = None
    order: Optional[tuple] = None


class _PlainOps(ScalarOps):
    def __init__(self, **attrs):
        self.__dict__.update(attrs)


def _scalar_ops(kind: str, ctx: _Ctx):
    if kind == "space":
        return ScalarOps(ctx.space)
    if kind in ("map", "nazmul"):
        return ScalarOps(f=ctx.f)
    if kind == "opmap":
        return _PlainOps(p=ctx.p, m=ctx.p.m, n=ctx.p.n, cls=ctx.p.classify())
    return _PlainOps(space=ctx.space, order=ctx.order)


def _nazmul_contexts(max_universe, max_bound) -> Iterator[_Ctx]:
    for kx in range(1, max_universe + 1):
        for ky in range(1, max_universe + 1):
            for m in range(max_bound + 1):
                dom, cod = domain_space(kx, m), codomain_space(ky, m)
                for table in product(cod.elements, repeat=kx):
                    yield _Ctx(f=nazmul_map(dict(zip(dom.elements, table)), m, cod))


def _contexts(kind: str, b: AuditBounds) -> Iterator[_Ctx]:
    U, B = b.max_universe, b.max_bound
    if kind in ("space", "dia"):
        for s in enumerate_spaces(U, B):
            yield _Ctx(space=s)
    elif kind == "map":
        for f in enumerate_maps(U, B):
            yield _Ctx(f=f)
    elif kind == "nazmul":
        yield from _nazmul_contexts(U, B)
    elif kind == "opmap":
        for m in range(B + 1):
            for n in range(B + 1):
                for p in enumerate_opmaps(m, n):
                    yield _Ctx(p=p)
    elif kind == "parikh":
        for s in enumerate_spaces(U, B):
            for order in permutations(s.elements):
                yield _Ctx(space=s, order=order)
    else:
        raise ValueError(kind)


_BATCH_CACHE: dict = {}


def _batch_contexts(kind: str, b: AuditBounds) -> list:
    key = (kind, b.max_universe, b.max_bound)
    if key not in _BATCH_CACHE:
        items = []
        for ctx in _contexts(kind, b):
            ops = BatchOps(ctx.space) if kind == "space" else BatchOps(f=ctx.f)
            items.append((ctx, ops))
        _BATCH_CACHE[key] = items
    return _BATCH_CACHE[key]


def _random_context(kind: str, rng: np.random.Generator, b: AuditBounds) -> _Ctx:
    U, B = b.random_universe, b.random_bound
    if kind == "space":
        return _Ctx(space=random_space(rng, U, B))
    if kind == "map":
        return _Ctx(f=random_map(rng, U, B))
    if kind == "nazmul":
        kx, ky = (int(v) for v in rng.integers(1, U + 1, size=2))
        m = int(rng.integers(0, B + 1))
        dom, cod = domain_space(kx, m), codomain_space(ky, m)
        table = [cod.elements[int(i)] for i in rng.integers(0, ky, size=kx)]
        return _Ctx(f=nazmul_map(dict(zip(dom.elements, table)), m, cod))
    if kind == "opmap":
        m = int(rng.integers(0, B + 1))
        n = 0 if m == 0 else int(rng.integers(0, B + 1))
        style = ("any", "identity", "surjective", "injective")[int(rng.integers(4))]
        if style == "identity":
            n = m
        return _Ctx(p=random_opmap(rng, m, n, style))
    if kind == "parikh":
        s = random_space(rng, U, B)
        order = tuple(s.elements[int(i)] for i in rng.permutation(s.size))
        return _Ctx(space=s, order=order)
    raise ValueError(kind)


def _var_space(claim: Claim, ctx: _Ctx) -> Space:
    if ctx.f is not None:
        return ctx.f.domain if claim.side == "X" else ctx.f.codomain
    return ctx.space


def _instance(claim: Claim, ctx: _Ctx, values) -> Instance:
    kind = "map" if claim.kind == "nazmul" else claim.kind
    return Instance(kind, ctx.space, ctx.f, ctx.p, ctx.order, tuple(zip(claim.vars, values)))


def _evaluate(claim: Claim, o, values) -> tuple:
    """Return ``(applicable, holds)`` for one scalar instance."""
    if claim.when is not None and not claim.when(o, *values):
        return False, True
    return True, bool(claim.check(o, *values))


# -- runners --------------------------------------------------------------


class _Tally:
    def __init__(self):
        self.checked = 0
        self.first: Optional[Instance] = None
        self.conditioned_violation = False
        self.any_violation = False


def _sweep_batched(claim: Claim, b: AuditBounds, tally: _Tally) -> None:
    r = len(claim.vars)
    for ctx, o in _batch_contexts(claim.kind, b):
        if claim.requires is not None and not claim.requires(o):
            continue
        side = o.X if claim.side == "X" else o.Y
        table = count_table(side.size, side.bound)
        if r:
            grid = np.indices((len(table),) * r).reshape(r, -1)
        else:
            grid = np.zeros((0, 1), dtype=np.intp)
        size = grid.shape[1]
        blocks = [Block(table[grid[i]], side.bound) for i in range(r)]
        ok = np.broadcast_to(np.asarray(claim.check(o, *blocks), dtype=bool), (size,))
        if claim.when is not None:
            app = np.broadcast_to(np.asarray(claim.when(o, *blocks), dtype=bool), (size,))
        else:
            app = np.ones(size, dtype=bool)
        tally.checked += int(app.sum())
        bad = app & ~ok
        if tally.first is None and bad.any():
            k = int(np.argmax(bad))
            space = _var_space(claim, ctx)
            values = [Multiset._trusted(space, tuple(int(c) for c in table[grid[i, k]])) for i in range(r)]
            tally.first = _instance(claim, ctx, values)
            tally.any_violation = True


def _var_domain(claim: Claim, ctx: _Ctx) -> list:
    if claim.kind == "opmap":
        return list(range(ctx.p.m + 1))
    return list(enumerate_multisets(_var_space(claim, ctx)))


def _record(claim, o, ctx, values, tally):
    applicable, ok = _evaluate(claim, o, values)
    if not applicable:
        return
    tally.checked += 1
    if ok:
        return
    tally.any_violation = True
    if claim.condition is not None and claim.condition(o, *values):
        tally.conditioned_violation = True
    if tally.first is None:
        tally.first = _instance(claim, ctx, values)


def _sweep_scalar(claim: Claim, b: AuditBounds, tally: _Tally) -> None:
    for ctx in _contexts(claim.kind, b):
        o = _scalar_ops(claim.kind, ctx)
        if claim.requires is not None and not claim.requires(o):
            continue
        domain = _var_domain(claim, ctx)
        for values in product(domain, repeat=len(claim.vars)):
            _record(claim, o, ctx, values, tally)


def _random_phase(claim: Claim, b: AuditBounds, tally: _Tally) -> None:
    if not claim.randomized or b.random_trials == 0:
        return
    rng = np.random.default_rng([b.seed & 0xFFFFFFFFFFFFFFFF, zlib.crc32(claim.id.encode())])
    for _ in range(b.random_trials):
        for _attempt in range(50):
            ctx = _random_context(claim.kind, rng, b)
            o = _scalar_ops(claim.kind, ctx)
            if claim.requires is None or claim.requires(o):
                break
        else:
            continue
        if claim.kind == "opmap":
            values = [int(v) for v in rng.integers(0, ctx.p.m + 1, size=len(claim.vars))]
        else:
            space = _var_space(claim, ctx)
            values = [random_multiset(rng, space) for _ in claim.vars]
        _record(claim, o, ctx, values, tally)


def run_claim(claim_id: str, bounds: AuditBounds = AuditBounds()) -> ClaimResult:
    claim = get_claim(claim_id)
    tally = _Tally()
    if claim.batched:
        _sweep_batched(claim, bounds, tally)
    else:
        _sweep_scalar(claim, bounds, tally)
    _random_phase(claim, bounds, tally)
    if not tally.any_violation:
        status = HOLDS
    elif claim.condition is not None and not tally.conditioned_violation:
        status = CONDITIONAL
    else:
        status = VIOLATED
    return ClaimResult(
        claim=claim.id,
        status=status,
        instances_checked=tally.checked,
        counterexample=tally.first,
        note=claim.note,
        statement=claim.statement,
        asserted=claim.asserted,
    )


def run_all(bounds: AuditBounds = AuditBounds(), claims=None) -> AuditReport:
    ids = [c.id for c in CATALOG] if claims is None else list(claims)
    return AuditReport(bounds, [run_claim(cid, bounds) for cid in ids])


def replay(claim_id: str, instance) -> bool:
    """Re-evaluate an instance on the core objects; True when the violation reproduces.

    ``instance`` is an :class:`Instance` or its ``to_dict`` form.
    """
    claim = get_claim(claim_id)
    if isinstance(instance, dict):
        instance = Instance.from_dict(instance, claim)
    ctx = _Ctx(instance.space, instance.f, instance.p, instance.order)
    o = _scalar_ops(claim.kind, ctx)
    if claim.requires is not None and not claim.requires(o):
        return False
    applicable, ok = _evaluate(claim, o, instance.bindings())
    return applicable and not ok
