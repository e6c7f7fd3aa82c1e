"""Line-oriented declaration documents.

::

    # comment
    space X^4 { a, b, c, d }
    mset A in X = { 1/a, 4/b, 2/c, 4/d }        # omitted elements count 0
    map f : X -> Y { u: a->y, b->y, c->z, d->s ; p: 0,1,5,5,5 }

A map header may repeat the bounds (``X^4 -> Y^5``); they must then agree
with the declared spaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core import Multiset, Space
from ..errors import DuplicateName, MultisetError, ParseError, UndeclaredName
from ..mapping import MultisetMap
from ..opmap import OPMap
from .tokens import Cursor, tokenize


@dataclass(frozen=True)
class MsetDecl:
    space: str
    value: Multiset


@dataclass(frozen=True)
class MapDecl:
    domain: str
    codomain: str
    value: MultisetMap


@dataclass
class Environment:
    spaces: dict = field(default_factory=dict)
    msets: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)


def _element(cur: Cursor) -> str:
    tok = cur.peek()
    if tok is None or tok.kind not in ("name", "int"):
        raise cur.error("expected an element name")
    cur.next()
    return tok.text


def _int(cur: Cursor, what: str) -> int:
    return int(cur.expect("int", what).text)


def _lookup_space(env: Environment, cur: Cursor):
    tok = cur.expect("name", "a space name")
    if tok.text not in env.spaces:
        raise UndeclaredName(f"undeclared space {tok.text!r}", tok.line, tok.column)
    space = env.spaces[tok.text]
    if cur.accept("^"):
        bt = cur.peek()
        bound = _int(cur, "a bound")
        if bound != space.bound:
            raise ParseError(
                f"BoundMismatch: {tok.text} is declared with bound {space.bound}, not {bound}",
                bt.line,
                bt.column,
            )
    return tok.text, space


def _declare(table: dict, tok, value, kind: str):
    if tok.text in table:
        raise DuplicateName(f"{kind} {tok.text!r} is already declared", tok.line, tok.column)
    table[tok.text] = value


def _validated(build, tok):
    try:
        return build()
    except MultisetError as e:
        raise ParseError(f"{type(e).__name__}: {e}", tok.line, tok.column) from e
    except (ValueError, TypeError) as e:
        raise ParseError(str(e), tok.line, tok.column) from e


def _space_decl(env, cur, head):
    name = cur.expect("name", "a space name")
    cur.expect("^")
    bound = _int(cur, "a bound")
    cur.expect("{")
    elements = []
    if not cur.at("}"):
        elements.append(_element(cur))
        while cur.accept(","):
            elements.append(_element(cur))
    cur.expect("}")
    space = _validated(lambda: Space(elements, bound), head)
    _declare(env.spaces, name, space, "space")


def _mset_decl(env, cur, head):
    name = cur.expect("name", "a multiset name")
    kw = cur.expect("name", "'in'")
    if kw.text != "in":
        raise cur.error("expected 'in'", kw)
    sname, space = _lookup_space(env, cur)
    cur.expect("=")
    cur.expect("{")
    counts = {}
    if not cur.at("}"):
        while True:
            count = _int(cur, "a count")
            cur.expect("/")
            etok = cur.peek()
            elem = _element(cur)
            if elem in counts:
                raise ParseError(f"element {elem!r} listed twice", etok.line, etok.column)
            if elem not in space:
                raise ParseError(
                    f"UnknownElement: {elem!r} is not in space {sname}", etok.line, etok.column
                )
            counts[elem] = count
            if not cur.accept(","):
                break
    cur.expect("}")
    value = _validated(lambda: Multiset(space, counts), name)
    _declare(env.msets, name, MsetDecl(sname, value), "multiset")


def _map_decl(env, cur, head):
    name = cur.expect("name", "a map name")
    cur.expect(":")
    dname, dom = _lookup_space(env, cur)
    cur.expect("->")
    cname, cod = _lookup_space(env, cur)
    cur.expect("{")
    kw = cur.expect("name", "'u'")
    if kw.text != "u":
        raise cur.error("expected 'u'", kw)
    cur.expect(":")
    table = {}
    if not cur.at(";"):
        while True:
            xt = cur.peek()
            x = _element(cur)
            cur.expect("->")
            y = _element(cur)
            if x in table:
                raise ParseError(f"u assigns {x!r} twice", xt.line, xt.column)
            table[x] = y
            if not cur.accept(","):
                break
    cur.expect(";")
    kw = cur.expect("name", "'p'")
    if kw.text != "p":
        raise cur.error("expected 'p'", kw)
    cur.expect(":")
    ptok = cur.peek()
    values = [_int(cur, "a value of p")]
    while cur.accept(","):
        values.append(_int(cur, "a value of p"))
    cur.expect("}")
    p = _validated(lambda: OPMap(dom.bound, cod.bound, tuple(values)), ptok)
    f = _validated(lambda: MultisetMap(dom, cod, table, p), name)
    _declare(env.maps, name, MapDecl(dname, cname, f), "map")


_DECLS = {"space": _space_decl, "mset": _mset_decl, "map": _map_decl}


def parse_document(text: str) -> Environment:
    """Parse a declaration document; the first error raises with its line and column."""
    env = Environment()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = tokenize(raw, lineno)
        if not tokens:
            continue
        cur = Cursor(tokens, lineno, len(raw.rstrip()) + 1)
        head = cur.next()
        if head.kind != "name" or head.text not in _DECLS:
            raise cur.error(f"expected 'space', 'mset' or 'map', found {head.text!r}", head)
        _DECLS[head.text](env, cur, head)
        if not cur.done():
            raise cur.error(f"unexpected {cur.peek().text!r}")
    return env


def render_multiset(value: Multiset) -> str:
    if not value.counts:
        return "{ }"
    return "{ " + ", ".join(f"{c}/{x}" for x, c in value.items()) + " }"


def render_document(env: Environment) -> str:
    """Canonical text for ``env``; parsing it back gives an equal environment."""
    lines = []
    for name, space in env.spaces.items():
        body = ", ".join(str(x) for x in space.elements)
        lines.append(f"space {name}^{space.bound} {{ {body} }}" if body else f"space {name}^{space.bound} {{ }}")
    for name, decl in env.msets.items():
        lines.append(f"mset {name} in {decl.space} = {render_multiset(decl.value)}")
    for name, decl in env.maps.items():
        f = decl.value
        pairs = ", ".join(f"{x}->{y}" for x, y in zip(f.domain.elements, f.u))
        lines.append(
            f"map {name} : {decl.domain}^{f.domain.bound} -> {decl.codomain}^{f.codomain.bound} "
            f"{{ u: {pairs} ; p: {f.p} }}"
        )
    return "\n".join(lines) + ("\n" if lines else "")
