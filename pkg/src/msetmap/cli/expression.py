"""Expressions over a parsed :class:`Environment`.

Precedence, loosest first: ``+`` (union) and ``-`` (difference), then ``&``
(intersection), then prefix ``~`` (complement).  ``f(A)`` is an image and
``f^-1(M)`` a preimage.  Built-in functions::

    sub(A,B)  coin(A,B)  card(A)  d(A,B)  S(A,B)  dia(Space)
    parikh(A)  parikh(A; e,a,b,d,c)  khomenko(f, A)

A map name shadows a built-in of the same name.
"""

from __future__ import annotations

from ..core import Multiset, cardinality, coincident, is_submset
from ..errors import EvalError, MultisetError
from ..interop import khomenko_codomain, khomenko_image, parikh_vector
from ..metrics import diameter, distance, format_real, similarity
from .document import Environment, render_multiset
from .tokens import Cursor, tokenize

# AST nodes are tuples: (tag, column, ...)


def _parse(text: str):
    cur = Cursor(tokenize(text), 1, len(text) + 1)
    node = _expr(cur)
    if not cur.done():
        raise cur.error(f"unexpected {cur.peek().text!r}")
    return node


def _expr(cur):
    node = _inter(cur)
    while cur.at("+") or cur.at("-"):
        op = cur.next()
        node = ("union" if op.kind == "+" else "diff", op.column, node, _inter(cur))
    return node


def _inter(cur):
    node = _unary(cur)
    while cur.at("&"):
        op = cur.next()
        node = ("inter", op.column, node, _unary(cur))
    return node


def _unary(cur):
    if cur.at("~"):
        op = cur.next()
        return ("comp", op.column, _unary(cur))
    return _primary(cur)


def _primary(cur):
    if cur.accept("("):
        node = _expr(cur)
        cur.expect(")")
        return node
    tok = cur.expect("name", "a name or '('")
    if cur.accept("^-1"):
        cur.expect("(")
        arg = _expr(cur)
        cur.expect(")")
        return ("pre", tok.column, tok.text, arg)
    if cur.accept("("):
        args, order = [], None
        if not cur.at(")"):
            args.append(_expr(cur))
            while cur.accept(","):
                args.append(_expr(cur))
            if cur.accept(";"):
                order = [cur.next().text]
                while cur.accept(","):
                    order.append(cur.next().text)
        cur.expect(")")
        return ("call", tok.column, tok.text, args, order)
    return ("name", tok.column, tok.text)


class _Evaluator:
    def __init__(self, env: Environment):
        self.env = env

    def multiset(self, node) -> Multiset:
        value = self.eval(node)
        if not isinstance(value, Multiset):
            raise EvalError("expected a multiset", node[1])
        return value

    def eval(self, node):
        tag, col = node[0], node[1]
        try:
            return getattr(self, "_" + tag)(node)
        except EvalError:
            raise
        except MultisetError as e:
            raise EvalError(f"{type(e).__name__}: {e}", col) from e

    def _name(self, node):
        name = node[2]
        if name not in self.env.msets:
            raise EvalError(f"undeclared multiset {name!r}", node[1])
        return self.env.msets[name].value

    def _union(self, node):
        return self.multiset(node[2]) | self.multiset(node[3])

    def _diff(self, node):
        return self.multiset(node[2]) - self.multiset(node[3])

    def _inter(self, node):
        return self.multiset(node[2]) & self.multiset(node[3])

    def _comp(self, node):
        return ~self.multiset(node[2])

    def _map(self, name, col):
        if name not in self.env.maps:
            raise EvalError(f"undeclared map {name!r}", col)
        return self.env.maps[name].value

    def _pre(self, node):
        return self._map(node[2], node[1]).preimage(self.multiset(node[3]))

    def _call(self, node):
        _, col, name, args, order = node
        if name in self.env.maps:
            self._arity(node, 1)
            return self.env.maps[name].value.image(self.multiset(args[0]))
        if order is not None and name != "parikh":
            raise EvalError(f"{name} takes no element list", col)
        if name == "sub":
            self._arity(node, 2)
            return is_submset(self.multiset(args[0]), self.multiset(args[1]))
        if name == "coin":
            self._arity(node, 2)
            return coincident(self.multiset(args[0]), self.multiset(args[1]))
        if name == "card":
            self._arity(node, 1)
            return cardinality(self.multiset(args[0]))
        if name == "d":
            self._arity(node, 2)
            return distance(self.multiset(args[0]), self.multiset(args[1]))
        if name == "S":
            self._arity(node, 2)
            return similarity(self.multiset(args[0]), self.multiset(args[1]))
        if name == "parikh":
            self._arity(node, 1)
            return parikh_vector(self.multiset(args[0]), order)
        if name == "dia":
            self._arity(node, 1)
            ref = args[0]
            if ref[0] != "name" or ref[2] not in self.env.spaces:
                raise EvalError("dia expects a space name", ref[1])
            return diameter(self.env.spaces[ref[2]])
        if name == "khomenko":
            self._arity(node, 2)
            ref = args[0]
            if ref[0] != "name":
                raise EvalError("khomenko expects a map name first", ref[1])
            f = self._map(ref[2], ref[1])
            a = self.multiset(args[1])
            codomain = khomenko_codomain(f.codomain.elements, a.space)
            return khomenko_image(f.u_dict, a, codomain)
        raise EvalError(f"unknown function or map {name!r}", col)

    @staticmethod
    def _arity(node, n):
        if len(node[3]) != n:
            raise EvalError(f"{node[2]} takes {n} argument{'s' if n != 1 else ''}", node[1])


def evaluate(env: Environment, expr: str):
    """Evaluate ``expr``; the result is a Multiset, bool, int, float or tuple."""
    return _Evaluator(env).eval(_parse(expr))


def render_value(value) -> str:
    if isinstance(value, Multiset):
        return render_multiset(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_real(value)
    if isinstance(value, tuple):
        return "(" + ",".join(str(v) for v in value) + ")"
    raise TypeError(f"cannot render {value!r}")


def eval_expression(env: Environment, expr: str) -> str:
    return render_value(evaluate(env, expr))
